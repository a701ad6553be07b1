//! Brute-force helpers shared by the integration suites. Deliberately
//! independent of the library's enumeration code.
#![allow(dead_code)] // each test target uses its own subset

/// Every partition of m, largest part first within each partition.
pub fn all_partitions(m: usize) -> Vec<Vec<usize>> {
    fn descend(remaining: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            acc.push(part);
            descend(remaining - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    descend(m, m, &mut Vec::new(), &mut out);
    out
}

/// The multiplicity-function form of the difference condition:
/// f_d + f_{d+1} <= k-1 for every value d >= 1.
pub fn multiplicity_form(parts: &[usize], k: usize) -> bool {
    let max = parts.iter().copied().max().unwrap_or(0);
    let mut freq = vec![0usize; max + 2];
    for &p in parts {
        freq[p] += 1;
    }
    (1..=max).all(|d| freq[d] + freq[d + 1] < k)
}

/// Deterministic xorshift generator for reproducible pseudo-random inputs.
pub struct Rng(pub u64);

impl Rng {
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform-ish value in `lo..=hi`.
    pub fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }
}
