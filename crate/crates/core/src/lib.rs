//! Exact combinatorics for Specht modules in Rouquier blocks of symmetric
//! groups: partitions, the James abacus, Littlewood–Richardson coefficients,
//! radical-layer polynomials, and a certificate for Hom-spaces of dimension
//! `k` between Specht modules labelled by staircase quotients.

pub mod abacus;
pub mod error;
pub mod homspace;
pub mod lr;
pub mod partition;
pub mod radical;

pub use abacus::{
    block_partitions, block_quotients, canonical_bead_count, core_and_quotient, from_abacus,
    from_core_and_quotient, is_prime, rouquier_core, to_abacus, AbacusConfig, BlockLabel,
    CoreQuotient,
};
pub use error::{Error, Result};
pub use homspace::{
    epsilon, gamma, mu, symmetric_group_degree, verify_hom_dimension, HomCertificate,
};
pub use lr::{lr_coefficient, lr_coefficient_bruteforce};
pub use partition::{partitions_of, Partition};
pub use radical::{
    decomposition_number, delta, loewy_length, rad_polynomial, radical_series, LayerDiagram,
    RadPolynomial,
};
