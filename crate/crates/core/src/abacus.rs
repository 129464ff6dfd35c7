//! James p-abacus: beta-sets, cores, quotients and Rouquier blocks.
//!
//! Bead position `n` sits on runner `n mod p`, row `n / p`. The bead count
//! is chosen so that, once every bead is pushed to the top of its runner,
//! the first empty position lies on runner 0. Quotient components are
//! numbered by runner under that convention.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, total_size, Partition};

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    (2..)
        .take_while(|d| d * d <= p)
        .all(|d| !p.is_multiple_of(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusConfig {
    p: u32,
    /// strictly decreasing
    beads: Vec<usize>,
}

impl AbacusConfig {
    pub fn new(p: u32, mut beads: Vec<usize>) -> Result<Self> {
        assert!(p >= 2, "an abacus needs at least two runners");
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition(
                "abacus has two beads in one position".into(),
            ));
        }
        Ok(AbacusConfig { p, beads })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Bead positions, largest first.
    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    /// Rows occupied on `runner`, deepest first.
    pub fn runner_rows(&self, runner: usize) -> Vec<usize> {
        let p = self.p as usize;
        self.beads
            .iter()
            .filter(|&&b| b % p == runner)
            .map(|&b| b / p)
            .collect()
    }

    pub fn runner_counts(&self) -> Vec<usize> {
        let p = self.p as usize;
        let mut counts = vec![0; p];
        for &b in &self.beads {
            counts[b % p] += 1;
        }
        counts
    }

    /// Every bead slid to the top of its runner.
    pub fn pushed_up(&self) -> AbacusConfig {
        let p = self.p as usize;
        let beads = self
            .runner_counts()
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| (0..c).map(move |row| row * p + r))
            .collect();
        AbacusConfig::new(self.p, beads).expect("pushed-up positions are distinct")
    }

    /// First position without a bead.
    pub fn first_gap(&self) -> usize {
        let mut expected = 0;
        for &b in self.beads.iter().rev() {
            if b != expected {
                break;
            }
            expected += 1;
        }
        expected
    }

    /// Bead diagram, one line per row, with a runner-label header.
    pub fn render(&self) -> String {
        let p = self.p as usize;
        let rows = self.beads.first().map_or(1, |&b| b / p + 1);
        let mut out = String::new();
        let header: Vec<String> = (0..p).map(|r| r.to_string()).collect();
        let _ = writeln!(out, "{}", header.join(" "));
        for row in 0..rows {
            let line: Vec<String> = (0..p)
                .map(|r| {
                    let cell = if self
                        .beads
                        .binary_search_by(|b| (row * p + r).cmp(b))
                        .is_ok()
                    {
                        "●"
                    } else {
                        "·"
                    };
                    format!("{cell:<width$}", width = header[r].len())
                })
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

fn beta_set(lambda: &Partition, bead_count: usize) -> Vec<usize> {
    debug_assert!(bead_count >= lambda.len());
    (0..bead_count)
        .map(|i| lambda.part(i) + bead_count - 1 - i)
        .collect()
}

/// Decodes a strictly decreasing beta-set: `λ_i = β_i − (N − i)`.
fn decode_beta(beta: &[usize]) -> Partition {
    let n = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (n - 1 - i))
        .filter(|&x| x > 0)
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// The bead count `N` with `len(λ) < N ≤ len(λ) + p` whose pushed-up abacus
/// has its first empty position on runner 0.
pub fn canonical_bead_count(lambda: &Partition, p: u32) -> usize {
    assert!(p >= 2, "an abacus needs at least two runners");
    let pu = p as usize;
    (lambda.len() + 1..=lambda.len() + pu)
        .find(|&n| {
            let a = AbacusConfig {
                p,
                beads: beta_set(lambda, n),
            };
            a.pushed_up().first_gap().is_multiple_of(pu)
        })
        .expect("the first gap moves by one position per added bead")
}

pub fn to_abacus(lambda: &Partition, p: u32) -> AbacusConfig {
    let n = canonical_bead_count(lambda, p);
    AbacusConfig {
        p,
        beads: beta_set(lambda, n),
    }
}

pub fn from_abacus(abacus: &AbacusConfig) -> Partition {
    decode_beta(&abacus.beads)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub p: u32,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub weight: usize,
}

pub fn core_and_quotient(lambda: &Partition, p: u32) -> CoreQuotient {
    let abacus = to_abacus(lambda, p);
    let core = from_abacus(&abacus.pushed_up());
    let quotient: Vec<Partition> = (0..p as usize)
        .map(|r| decode_beta(&abacus.runner_rows(r)))
        .collect();
    let weight = total_size(&quotient);
    debug_assert_eq!(lambda.size(), core.size() + p as usize * weight);
    CoreQuotient {
        p,
        core,
        quotient,
        weight,
    }
}

/// Label of a block: a p-core together with a weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLabel {
    p: u32,
    rho: Partition,
    w: usize,
}

impl BlockLabel {
    pub fn new(p: u32, rho: Partition, w: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if core_and_quotient(&rho, p).weight != 0 {
            return Err(Error::InvalidPartition(format!("{rho} is not a {p}-core")));
        }
        Ok(BlockLabel { p, rho, w })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// `|ρ| + p·w`.
    pub fn degree(&self) -> usize {
        self.rho.size() + self.p as usize * self.w
    }

    /// Quotient of `lambda`, after checking it lies in this block.
    pub fn quotient_of(&self, lambda: &Partition) -> Result<Vec<Partition>> {
        let cq = core_and_quotient(lambda, self.p);
        if cq.core != self.rho || cq.weight != self.w {
            return Err(Error::NotInBlock {
                partition: lambda.to_string(),
            });
        }
        Ok(cq.quotient)
    }

    pub(crate) fn check_quotient(&self, quotient: &[Partition]) -> Result<()> {
        if quotient.len() != self.p as usize {
            return Err(Error::QuotientLength {
                expected: self.p as usize,
                got: quotient.len(),
            });
        }
        let got = total_size(quotient);
        if got != self.w {
            return Err(Error::QuotientSize {
                expected: self.w,
                got,
            });
        }
        Ok(())
    }
}

/// The Rouquier core for weight `w`: runner `i` carries `w + i(w−1)` beads.
pub fn rouquier_core(p: u32, w: usize) -> Result<BlockLabel> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if w == 0 {
        return Err(Error::Invariant(
            "the Rouquier core is defined for positive weight".into(),
        ));
    }
    let pu = p as usize;
    let beads = (0..pu)
        .flat_map(|i| (0..w + i * (w - 1)).map(move |row| row * pu + i))
        .collect();
    let rho = from_abacus(&AbacusConfig::new(p, beads)?);
    Ok(BlockLabel { p, rho, w })
}

/// The partition of the block with the given quotient.
pub fn from_core_and_quotient(block: &BlockLabel, quotient: &[Partition]) -> Result<Partition> {
    block.check_quotient(quotient)?;
    let p = block.p as usize;
    let counts = to_abacus(&block.rho, block.p).runner_counts();
    let extra_rows = counts
        .iter()
        .zip(quotient)
        .map(|(&c, q)| q.len().saturating_sub(c))
        .max()
        .unwrap_or(0);
    let mut beads = Vec::with_capacity(counts.iter().sum::<usize>() + p * extra_rows);
    for (r, (&c, q)) in counts.iter().zip(quotient).enumerate() {
        let m = c + extra_rows;
        beads.extend(beta_set(q, m).into_iter().map(|row| row * p + r));
    }
    Ok(from_abacus(&AbacusConfig::new(block.p, beads)?))
}

/// Compositions of `total` into `slots` nonnegative parts, lexicographically
/// descending.
fn compositions(total: usize, slots: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for x in (0..=remaining).rev() {
            current.push(x);
            go(remaining - x, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if slots == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, slots, &mut Vec::new(), &mut out);
    out
}

/// All p-tuples of partitions of total size `w`; with `restricted_only` the
/// last component is forced empty.
pub fn block_quotients(p: u32, w: usize, restricted_only: bool) -> Vec<Vec<Partition>> {
    let p = p as usize;
    let free = if restricted_only { p - 1 } else { p };
    let tables: Vec<Vec<Partition>> = (0..=w).map(partitions_of).collect();
    let mut out = Vec::new();
    for comp in compositions(w, free) {
        let mut tuples: Vec<Vec<Partition>> = vec![Vec::with_capacity(p)];
        for &s in &comp {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    tables[s].iter().map(move |q| {
                        let mut t = t.clone();
                        t.push(q.clone());
                        t
                    })
                })
                .collect();
        }
        for mut t in tuples {
            t.resize(p, Partition::empty());
            out.push(t);
        }
    }
    out
}

pub fn block_partitions(block: &BlockLabel, restricted_only: bool) -> Vec<Partition> {
    block_quotients(block.p, block.w, restricted_only)
        .iter()
        .map(|q| from_core_and_quotient(block, q).expect("quotient has the block's weight"))
        .collect()
}
