//! Radical layers of dual Specht modules `S(λ)` in a Rouquier block of
//! weight `w < p`.
//!
//! For `λ, σ` in the block with `σ` p-restricted, the multiplicity of `D(σ)`
//! in the layers of `S(λ)` is the single-variable polynomial
//!
//! ```text
//! rad(v) = v^(δ(λ̄,σ̄) − |λ^{p−1}|) · Σ Π_j c(λ^j; α^j, β^j) · c(σ^j; β^j, (α^{j+1})′)
//! ```
//!
//! summed over partitions `α^0..α^p`, `β^0..β^{p−1}`, where
//! `δ(λ̄,σ̄) = Σ_{j≥1} j(|λ^j| − |σ^j|)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::{block_quotients, from_core_and_quotient, rouquier_core, BlockLabel};
use crate::error::{Error, Result};
use crate::lr::lr_coefficient;
use crate::partition::{partitions_of, Partition};

/// Polynomial in `v` with positive integer coefficients, keyed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadPolynomial {
    coeffs: BTreeMap<usize, u64>,
}

impl RadPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coefficient: u64, degree: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        if coefficient > 0 {
            coeffs.insert(degree, coefficient);
        }
        RadPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, degree: usize) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    /// `(degree, coefficient)` pairs, lowest degree first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(usize, u64)> {
        match self.coeffs.len() {
            1 => self.terms().next(),
            _ => None,
        }
    }

    /// Value at `v = 1`.
    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for RadPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*v^{d}")?;
        }
        Ok(())
    }
}

pub fn delta(lambda_quotient: &[Partition], sigma_quotient: &[Partition]) -> i64 {
    debug_assert_eq!(lambda_quotient.len(), sigma_quotient.len());
    lambda_quotient
        .iter()
        .zip(sigma_quotient)
        .enumerate()
        .skip(1)
        .map(|(j, (l, s))| j as i64 * (l.size() as i64 - s.size() as i64))
        .sum()
}

fn check_block(block: &BlockLabel) -> Result<()> {
    let p = block.p();
    if block.w() >= p as usize {
        return Err(Error::WeightOutOfRange { p, w: block.w() });
    }
    if block.w() > 0 && rouquier_core(p, block.w())?.rho() != block.rho() {
        return Err(Error::NotRouquier { p, w: block.w() });
    }
    Ok(())
}

/// The Σ of products, walking runners left to right. The state after runner
/// `j` is the multiset of admissible `α^{j+1}` weighted by partial products.
fn product_sum(lq: &[Partition], sq: &[Partition]) -> u64 {
    let p = lq.len();
    let mut states: HashMap<Partition, u64> = (0..=lq[0].size())
        .flat_map(|s| lq[0].subpartitions_of_size(s))
        .map(|a| (a, 1))
        .collect();
    for j in 0..p {
        let (lj, sj) = (&lq[j], &sq[j]);
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (alpha, weight) in &states {
            let Some(beta_size) = lj.size().checked_sub(alpha.size()) else {
                continue;
            };
            for beta in lj.subpartitions_of_size(beta_size) {
                let c1 = lr_coefficient(lj, alpha, &beta);
                if c1 == 0 {
                    continue;
                }
                let Some(next_size) = sj.size().checked_sub(beta.size()) else {
                    continue;
                };
                // α^p only enters through its conjugate; every shape is tried
                let candidates = if j + 1 < p {
                    lq[j + 1].subpartitions_of_size(next_size)
                } else {
                    partitions_of(next_size)
                };
                for next_alpha in candidates {
                    let c2 = lr_coefficient(sj, &beta, &next_alpha.conjugate());
                    if c2 == 0 {
                        continue;
                    }
                    debug_assert_eq!(alpha.size() + beta.size(), lj.size());
                    debug_assert_eq!(beta.size() + next_alpha.size(), sj.size());
                    *next.entry(next_alpha).or_default() += weight * c1 * c2;
                }
            }
        }
        if next.is_empty() {
            return 0;
        }
        states = next;
    }
    states.values().sum()
}

/// Radical polynomial from quotients. `sigma_quotient` must have an empty
/// last component (p-restricted).
pub fn rad_polynomial_quotients(
    block: &BlockLabel,
    lambda_quotient: &[Partition],
    sigma_quotient: &[Partition],
) -> Result<RadPolynomial> {
    check_block(block)?;
    block.check_quotient(lambda_quotient)?;
    block.check_quotient(sigma_quotient)?;
    let p = block.p() as usize;
    if !sigma_quotient[p - 1].is_empty() {
        return Err(Error::NotRestricted(quotient_label(sigma_quotient)));
    }
    rad_unchecked(lambda_quotient, sigma_quotient)
}

fn rad_unchecked(lq: &[Partition], sq: &[Partition]) -> Result<RadPolynomial> {
    let p = lq.len();
    let exponent = delta(lq, sq) - lq[p - 1].size() as i64;
    let sum = product_sum(lq, sq);
    if sum == 0 {
        return Ok(RadPolynomial::zero());
    }
    if exponent < 0 {
        return Err(Error::Invariant(format!(
            "nonzero radical sum {sum} with negative exponent {exponent} for {} / {}",
            quotient_label(lq),
            quotient_label(sq)
        )));
    }
    Ok(RadPolynomial::monomial(sum, exponent as usize))
}

pub fn rad_polynomial(
    block: &BlockLabel,
    lambda: &Partition,
    sigma: &Partition,
) -> Result<RadPolynomial> {
    check_block(block)?;
    if !sigma.is_p_restricted(block.p()) {
        return Err(Error::NotRestricted(sigma.to_string()));
    }
    let lq = block.quotient_of(lambda)?;
    let sq = block.quotient_of(sigma)?;
    rad_polynomial_quotients(block, &lq, &sq)
}

/// Total multiplicity `[S(λ) : D(σ)]`.
pub fn decomposition_number(
    block: &BlockLabel,
    lambda: &Partition,
    sigma: &Partition,
) -> Result<u64> {
    Ok(rad_polynomial(block, lambda, sigma)?.total())
}

/// `[1];[2,1];[]` style label for a quotient tuple.
pub fn quotient_label(quotient: &[Partition]) -> String {
    quotient
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerEntry {
    pub partition: Partition,
    pub quotient: Vec<Partition>,
    pub multiplicity: u64,
}

/// Radical layers, top (index 0) first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LayerDiagram {
    pub layers: Vec<Vec<LayerEntry>>,
}

impl LayerDiagram {
    pub fn loewy_length(&self) -> usize {
        self.layers.iter().filter(|l| !l.is_empty()).count()
    }

    pub fn layer(&self, index: usize) -> &[LayerEntry] {
        self.layers.get(index).map_or(&[], Vec::as_slice)
    }

    /// Compact one-line form with quotient labels, e.g.
    /// `L0: 1x<[2,1];[1];[]> | L1: 1x<[3,1];[];[]>, ...`.
    pub fn text(&self) -> String {
        if self.layers.is_empty() {
            return "0".into();
        }
        self.layers
            .iter()
            .enumerate()
            .map(|(i, layer)| format!("L{i}: {}", layer_text(layer)))
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// Stacked boxes, one box per layer. `expand` labels simples by full
    /// partition instead of quotient.
    pub fn render(&self, expand: bool) -> String {
        let rows: Vec<String> = self
            .layers
            .iter()
            .map(|layer| {
                if layer.is_empty() {
                    return String::new();
                }
                layer
                    .iter()
                    .map(|e| {
                        let label = if expand {
                            format!("D({})", e.partition)
                        } else {
                            format!("D<{}>", quotient_label(&e.quotient))
                        };
                        match e.multiplicity {
                            1 => label,
                            m => format!("{m}*{label}"),
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            })
            .collect();
        let width = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
        let rule = format!("+{}+\n", "-".repeat(width + 2));
        let mut out = rule.clone();
        for (i, row) in rows.iter().enumerate() {
            let pad = width - row.chars().count();
            out.push_str(&format!("| {row}{} |  layer {i}\n", " ".repeat(pad)));
            out.push_str(&rule);
        }
        out
    }
}

/// Entries as `multiplicity x <quotient>`, in block order.
pub fn layer_text(layer: &[LayerEntry]) -> String {
    if layer.is_empty() {
        return "{}".into();
    }
    let body = layer
        .iter()
        .map(|e| format!("{}x<{}>", e.multiplicity, quotient_label(&e.quotient)))
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{body}}}")
}

pub type ProfileEntry = (Vec<Partition>, RadPolynomial);
pub type Profile = Vec<ProfileEntry>;

/// Nonzero radical polynomials of `S(λ)` against every restricted `σ` in the
/// block, in block enumeration order.
pub fn radical_profile(block: &BlockLabel, lambda_quotient: &[Partition]) -> Result<Profile> {
    check_block(block)?;
    block.check_quotient(lambda_quotient)?;
    let candidates = block_quotients(block.p(), block.w(), true);
    let results: Vec<Result<Option<ProfileEntry>>> = candidates
        .into_par_iter()
        .map(|sq| {
            let poly = rad_unchecked(lambda_quotient, &sq)?;
            Ok((!poly.is_zero()).then_some((sq, poly)))
        })
        .collect();
    results.into_iter().filter_map(Result::transpose).collect()
}

pub fn radical_series_quotients(
    block: &BlockLabel,
    lambda_quotient: &[Partition],
) -> Result<LayerDiagram> {
    let profile = radical_profile(block, lambda_quotient)?;
    let mut layers: Vec<Vec<LayerEntry>> = Vec::new();
    for (sq, poly) in profile {
        let partition = from_core_and_quotient(block, &sq)?;
        for (degree, multiplicity) in poly.terms() {
            if layers.len() <= degree {
                layers.resize(degree + 1, Vec::new());
            }
            layers[degree].push(LayerEntry {
                partition: partition.clone(),
                quotient: sq.clone(),
                multiplicity,
            });
        }
    }
    Ok(LayerDiagram { layers })
}

pub fn radical_series(block: &BlockLabel, lambda: &Partition) -> Result<LayerDiagram> {
    check_block(block)?;
    let lq = block.quotient_of(lambda)?;
    radical_series_quotients(block, &lq)
}

pub fn loewy_length(block: &BlockLabel, lambda: &Partition) -> Result<usize> {
    Ok(radical_series(block, lambda)?.loewy_length())
}
