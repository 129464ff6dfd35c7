//! Littlewood–Richardson coefficients `c(λ; μ, ν)`.
//!
//! `c(λ; μ, ν)` counts semistandard fillings of the skew shape `λ/μ` with
//! content `ν` whose reverse reading word (rows top to bottom, each read right
//! to left) is a lattice word. It vanishes unless `|λ| = |μ| + |ν|`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partition::Partition;

type Key = (Partition, Partition, Partition);

fn cache() -> &'static RwLock<HashMap<Key, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized LR coefficient. The cache is keyed on `λ` and the unordered pair
/// `{μ, ν}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(lambda == nu);
    }
    if nu.is_empty() {
        return u64::from(lambda == mu);
    }
    // fill the smaller skew shape
    let (inner, content) = if mu >= nu { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), inner.clone(), content.clone());
    if let Some(&c) = cache().read().unwrap().get(&key) {
        return c;
    }
    let c = count_lr_fillings(lambda, inner, content);
    cache().write().unwrap().insert(key, c);
    c
}

/// Uncached DFS count of LR tableaux of shape `λ/μ` and content `ν`.
///
/// Cells are visited row by row, right to left within a row, which is the
/// reverse reading order; the lattice condition is therefore checked on every
/// prefix as it is built.
pub fn count_lr_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut state = Filling {
        lambda,
        mu,
        nu: nu.parts(),
        grid: (0..lambda.len())
            .map(|r| vec![0u8; lambda.part(r)])
            .collect(),
        counts: vec![0; nu.len() + 1],
    };
    state.dfs(&cells, 0)
}

struct Filling<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a [usize],
    grid: Vec<Vec<u8>>,
    /// counts[x] = occurrences of entry x so far (1-based entries)
    counts: Vec<usize>,
}

impl Filling<'_> {
    fn dfs(&mut self, cells: &[(usize, usize)], idx: usize) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        // right neighbour already filled (same row, visited earlier)
        let hi = if c + 1 < self.lambda.part(r) {
            self.grid[r][c + 1] as usize
        } else {
            self.nu.len()
        };
        let lo = if r > 0 && c >= self.mu.part(r - 1) {
            self.grid[r - 1][c] as usize + 1
        } else {
            1
        };
        let mut total = 0;
        for x in lo..=hi.min(r + 1) {
            if self.counts[x] == self.nu[x - 1] {
                continue;
            }
            if x > 1 && self.counts[x] + 1 > self.counts[x - 1] {
                continue;
            }
            self.counts[x] += 1;
            self.grid[r][c] = x as u8;
            total += self.dfs(cells, idx + 1);
            self.counts[x] -= 1;
        }
        total
    }
}

/// Reference count by exhaustive generation: every word with content `ν` is
/// laid into `λ/μ` and kept if it is semistandard with a lattice reverse
/// reading word. Exponential; for small shapes only.
pub fn lr_coefficient_bruteforce(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return 0;
    }
    // reading order: top to bottom, left to right
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).map(move |c| (r, c)))
        .collect();
    let mut remaining: Vec<usize> = nu.parts().to_vec();
    let mut word = Vec::with_capacity(cells.len());
    let mut count = 0;
    for_each_word(&mut remaining, &mut word, cells.len(), &mut |w| {
        if is_lr_tableau(lambda, mu, &cells, w) {
            count += 1;
        }
    });
    count
}

fn for_each_word(
    remaining: &mut [usize],
    word: &mut Vec<usize>,
    len: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if word.len() == len {
        visit(word);
        return;
    }
    for x in 0..remaining.len() {
        if remaining[x] > 0 {
            remaining[x] -= 1;
            word.push(x + 1);
            for_each_word(remaining, word, len, visit);
            word.pop();
            remaining[x] += 1;
        }
    }
}

fn is_lr_tableau(
    lambda: &Partition,
    mu: &Partition,
    cells: &[(usize, usize)],
    word: &[usize],
) -> bool {
    let mut grid: Vec<Vec<usize>> = (0..lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    for (&(r, c), &x) in cells.iter().zip(word) {
        grid[r][c] = x;
    }
    for &(r, c) in cells {
        if c > mu.part(r) && grid[r][c - 1] > grid[r][c] {
            return false;
        }
        if r > 0 && c >= mu.part(r - 1) && grid[r - 1][c] >= grid[r][c] {
            return false;
        }
    }
    let max = word.iter().copied().max().unwrap_or(0);
    let mut seen = vec![0usize; max + 2];
    for (r, row) in grid.iter().enumerate() {
        for &x in row[mu.part(r)..].iter().rev() {
            seen[x] += 1;
            if x > 1 && seen[x] > seen[x - 1] {
                return false;
            }
        }
    }
    true
}
