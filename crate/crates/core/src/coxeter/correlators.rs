use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactalg::{factorial, GaussianRational};

/// `⟨τ_ᾱ σ^{k(ᾱ)}⟩°` keyed by the sorted tuple `ᾱ`.
#[derive(Clone, Debug)]
pub struct CorrelatorTable {
    pub n: usize,
    /// `⟨σ^{N+2}⟩°`.
    pub sigma_only: GaussianRational,
    pub values: BTreeMap<Vec<usize>, GaussianRational>,
}

impl CorrelatorTable {
    /// `k(ᾱ) = N + 2 − Σ(N + 2 − α_i)`.
    pub fn k_of(&self, alphas: &[usize]) -> i64 {
        k_of(self.n, alphas)
    }
}

fn k_of(n: usize, alphas: &[usize]) -> i64 {
    let np2 = n as i64 + 2;
    np2 - alphas.iter().map(|&a| np2 - a as i64).sum::<i64>()
}

/// `x / m!`-style factor; `None` when `m < 0` (the term is absent).
fn inv_fact(m: i64) -> Option<GaussianRational> {
    (m >= 0).then(|| factorial(m as u64).inv().expect("nonzero"))
}

struct Rec {
    n: usize,
    memo: BTreeMap<Vec<usize>, GaussianRational>,
}

impl Rec {
    fn get(&mut self, alphas: &[usize]) -> GaussianRational {
        let mut key = alphas.to_vec();
        key.sort_unstable();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = self.compute(&key);
        self.memo.insert(key, v.clone());
        v
    }

    fn compute(&mut self, a: &[usize]) -> GaussianRational {
        let n = self.n;
        let k = k_of(n, a);
        if k < 0 {
            return GaussianRational::zero();
        }
        if a.len() == 1 {
            // seed ⟨τ_α σ^α⟩° = (α − 1)!
            return factorial(a[0] as u64 - 1);
        }
        let len = a.len();
        let mut acc = GaussianRational::zero();
        // subsets encoded by bitmasks over positions 2..len; positions 0 and 1
        // are placed explicitly
        for mask in 0u32..(1 << (len - 2)) {
            let rest_in_i = |j: usize| mask & (1 << (j - 2)) != 0;
            // first sum: 0 ∈ I, 1 ∈ J
            let mut i_set = vec![a[0]];
            let mut j_set = vec![a[1]];
            for j in 2..len {
                if rest_in_i(j) {
                    i_set.push(a[j]);
                } else {
                    j_set.push(a[j]);
                }
            }
            let (ki, kj) = (k_of(n, &i_set), k_of(n, &j_set));
            if let (Some(fi), Some(fj)) = (inv_fact(ki - 1), inv_fact(kj - 1)) {
                let term = &(&self.get(&i_set) * &self.get(&j_set)) * &(&fi * &fj);
                acc += &term;
            }
            // second sum: 0, 1 ∈ I, J ≠ ∅
            let mut i_set = vec![a[0], a[1]];
            let mut j_set = Vec::new();
            for j in 2..len {
                if rest_in_i(j) {
                    i_set.push(a[j]);
                } else {
                    j_set.push(a[j]);
                }
            }
            if !j_set.is_empty() {
                let (ki, kj) = (k_of(n, &i_set), k_of(n, &j_set));
                if let (Some(fi), Some(fj)) = (inv_fact(ki), inv_fact(kj - 2)) {
                    let term = &(&self.get(&i_set) * &self.get(&j_set)) * &(&fi * &fj);
                    acc -= &term;
                }
            }
        }
        &acc * &factorial(k as u64)
    }
}

/// All `⟨τ_ᾱ σ^{k(ᾱ)}⟩°` for `A_N` with `1 ≤ |ᾱ| ≤ max_n` and `k(ᾱ) ≥ 0`,
/// from the seeds `⟨τ_α σ^α⟩° = (α−1)!` and `⟨σ^{N+2}⟩° = N!` through the
/// splitting recursion obtained from the second open WDVV family.
pub fn correlator_recursion_a(n: usize, max_n: usize) -> CorrelatorTable {
    let mut rec = Rec { n, memo: BTreeMap::new() };
    let mut values = BTreeMap::new();
    let mut stack: Vec<Vec<usize>> = (1..=n).map(|a| vec![a]).collect();
    while let Some(t) = stack.pop() {
        if k_of(n, &t) < 0 {
            continue;
        }
        let v = rec.get(&t);
        values.insert(t.clone(), v);
        if t.len() < max_n {
            let last = *t.last().unwrap();
            for a in last..=n {
                let mut u = t.clone();
                u.push(a);
                stack.push(u);
            }
        }
    }
    CorrelatorTable {
        n,
        sigma_only: factorial(n as u64),
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::openext::{a_open_correlator, open_potential_a};

    #[test]
    fn examples() {
        // k((2,2)) = 2 − N, so ⟨τ_2 τ_2⟩° = 1 for N = 2 and absent beyond
        let t = correlator_recursion_a(2, 2);
        assert_eq!(t.values[&vec![2, 2]], GaussianRational::from_int(1));
        let t = correlator_recursion_a(3, 3);
        assert_eq!(t.k_of(&[2, 2]), -1);
        assert!(!t.values.contains_key(&vec![2, 2]));
        assert_eq!(t.values[&vec![3, 3]], GaussianRational::from_int(1));
    }

    #[test]
    fn agrees_with_closed_form() {
        for n in 1..=5 {
            let t = correlator_recursion_a(n, 6);
            assert!(t.values.len() >= n);
            for (al, v) in &t.values {
                let k = t.k_of(al) as usize;
                assert_eq!(v, &a_open_correlator(n, al, k), "A{n} {al:?}");
            }
        }
    }

    #[test]
    fn agrees_with_derivatives() {
        let n = 3;
        let ext = open_potential_a(n).unwrap();
        let t = correlator_recursion_a(n, 4);
        for (al, v) in &t.values {
            let mut d = ext.potential().clone();
            for &a in al {
                d = d.diff(a - 1);
            }
            d = d.diff_n(n, t.k_of(al) as usize);
            assert_eq!(&d.at_origin().unwrap(), v);
        }
        let top = ext.potential().diff_n(n, n + 2).at_origin().unwrap();
        assert_eq!(top, t.sigma_only);
    }
}
