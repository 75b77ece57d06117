//! Integer partitions, hook lengths, the p-abacus, cores and weights.
//!
//! Partitions label the irreducible characters of symmetric groups; hooks
//! carry their degrees and p-valuations, and the abacus turns rim-hook
//! removal into bead moves. Everything here is pure and exact.

use crate::exactnum::{int_valuation, legendre_valuation};
use crate::Int;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

/// A partition of a non-negative integer: weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.last().is_none_or(|&p| p > 0),
            "parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer `n`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `row` (0-based), zero beyond the last row.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook length of cell `(i, j)` (0-based): `lambda_i - j + lambda'_j - i - 1`.
    pub fn hook_at(&self, i: usize, j: usize, conj: &Partition) -> usize {
        self.parts[i] - j + conj.parts[j] - i - 1
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> HookData {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] {
                hooks.push(self.hook_at(i, j, &conj));
            }
        }
        HookData { hook_lengths: hooks }
    }

    /// Character degree by the hook formula: `n! / prod(hooks)`, exact.
    pub fn degree(&self) -> Int {
        let n = self.size();
        let mut num = Int::one();
        for k in 2..=n {
            num *= Int::from(k);
        }
        for h in self.hook_lengths().hook_lengths {
            num /= Int::from(h);
        }
        num
    }

    /// Defect of the labelled character at `p`: the total p-valuation of the
    /// hooks, which equals `v_p(n!) - v_p(degree)`. Both routes are computed
    /// and compared.
    pub fn char_defect(&self, p: u64) -> u64 {
        let hooks = self.hook_lengths();
        let from_hooks: u64 = hooks.hook_lengths.iter().map(|&h| int_valuation(h as u64, p)).sum();
        let mut deg_val = 0u64;
        let big_p = Int::from(p);
        let mut deg = self.degree();
        while (&deg % &big_p).is_zero() {
            deg /= &big_p;
            deg_val += 1;
        }
        let via_degree = legendre_valuation(self.size() as u64, p) - deg_val;
        assert_eq!(from_hooks, via_degree, "hook valuation mismatch for {self}");
        from_hooks
    }

    /// True iff no part value occurs `p` or more times.
    pub fn is_p_regular(&self, p: u64) -> bool {
        let p = p as usize;
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            if j - i >= p {
                return false;
            }
            i = j;
        }
        true
    }

    /// The p-core and the block weight, via the abacus: slide every bead
    /// fully up its runner; the weight is the number of one-step moves.
    pub fn p_core_and_weight(&self, p: usize) -> (Partition, usize) {
        assert!(p >= 2);
        let ab = Abacus::new(self, p);
        let (core_ab, weight) = ab.push_up();
        (core_ab.to_partition(), weight)
    }

    /// All partitions of `n`, parts generated largest-first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: stack.clone() });
                return;
            }
            for k in (1..=max.min(n)).rev() {
                stack.push(k);
                rec(n - k, k, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// The multiset of hook lengths of a partition, one per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    pub hook_lengths: Vec<usize>,
}

impl HookData {
    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.hook_lengths.clone();
        v.sort_unstable();
        v
    }
}

/// James's bead model: beads on `runner_count` runners at the beta-numbers
/// `lambda_i + b - i`, padding the partition with zero parts up to `b`.
#[derive(Clone, Debug)]
pub struct Abacus {
    runner_count: usize,
    beads: Vec<usize>,
}

impl Abacus {
    /// Normalised display: the bead count is the smallest positive multiple
    /// of p that is at least the number of parts, so runner assignment is
    /// stable under padding.
    pub fn new(lambda: &Partition, p: usize) -> Self {
        let b = lambda.len().div_ceil(p).max(1) * p;
        Self::with_beads(lambda, p, b)
    }

    pub fn with_beads(lambda: &Partition, p: usize, b: usize) -> Self {
        assert!(b >= lambda.len());
        let beads = (0..b).map(|i| lambda.part(i) + b - i - 1).collect();
        Abacus { runner_count: p, beads }
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn to_partition(&self) -> Partition {
        let mut sorted = self.beads.clone();
        sorted.sort_unstable();
        let mut parts: Vec<usize> = sorted.iter().enumerate().map(|(i, &beta)| beta - i).collect();
        parts.reverse();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    /// Slide every bead fully up its runner. Returns the resulting abacus
    /// and the total number of single-step moves.
    pub fn push_up(&self) -> (Abacus, usize) {
        let p = self.runner_count;
        let mut new_beads = Vec::with_capacity(self.beads.len());
        let mut moves = 0;
        for r in 0..p {
            let mut levels: Vec<usize> =
                self.beads.iter().filter(|&&b| b % p == r).map(|&b| b / p).collect();
            levels.sort_unstable();
            for (slot, level) in levels.iter().enumerate() {
                moves += level - slot;
                new_beads.push(slot * p + r);
            }
        }
        (Abacus { runner_count: p, beads: new_beads }, moves)
    }
}

/// Remove the rim hook determined by cell `(i, j)`, working on the Young
/// diagram itself: rows `i..=last` shift up by one column-step and the last
/// row is cut at `j`. This is the diagram-level route, independent of the
/// abacus. Returns the smaller partition.
pub fn remove_rim_hook(lambda: &Partition, i: usize, j: usize) -> Partition {
    let last = (i..lambda.len()).take_while(|&r| lambda.part(r) > j).last().unwrap();
    let mut parts: Vec<usize> = lambda.parts().to_vec();
    for r in i..last {
        parts[r] = lambda.part(r + 1) - 1;
    }
    parts[last] = j;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Partition::new(parts)
}

/// All partitions reachable from `lambda` by removing one rim hook of
/// length `h`.
pub fn rim_hook_removals(lambda: &Partition, h: usize) -> Vec<Partition> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for i in 0..lambda.len() {
        for j in 0..lambda.part(i) {
            if lambda.hook_at(i, j, &conj) == h {
                out.push(remove_rim_hook(lambda, i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{HashMap, HashSet};

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Brute-force hook length: count cells of the diagram to the right and
    /// below, plus the cell itself.
    fn hook_by_scan(lambda: &Partition, i: usize, j: usize) -> usize {
        let arm = lambda.part(i) - j - 1;
        let leg = (i + 1..lambda.len()).filter(|&r| lambda.part(r) > j).count();
        arm + leg + 1
    }

    #[test]
    fn hooks_of_2_1() {
        assert_eq!(pt(&[2, 1]).hook_lengths().sorted(), vec![1, 1, 3]);
    }

    #[test]
    fn hooks_of_single_row() {
        for n in 1..=8 {
            assert_eq!(pt(&[n]).hook_lengths().sorted(), (1..=n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn hooks_of_3_2() {
        assert_eq!(pt(&[3, 2]).hook_lengths().hook_lengths, vec![4, 3, 1, 2, 1]);
    }

    #[test]
    fn hooks_match_diagram_scan() {
        for n in 0..=12 {
            for lam in Partition::all(n) {
                let conj = lam.conjugate();
                for i in 0..lam.len() {
                    for j in 0..lam.part(i) {
                        assert_eq!(lam.hook_at(i, j, &conj), hook_by_scan(&lam, i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        for n in 1..=9 {
            assert_eq!(pt(&[n]).degree(), Int::from(1));
            if n >= 2 {
                assert_eq!(pt(&[n - 1, 1]).degree(), Int::from(n - 1));
            }
        }
        assert_eq!(pt(&[2, 1]).degree(), Int::from(2));
    }

    #[test]
    fn degree_squares_sum_to_factorial() {
        for n in 0..=12usize {
            let mut fact = Int::one();
            for k in 2..=n {
                fact *= Int::from(k);
            }
            let total: Int = Partition::all(n).iter().map(|l| l.degree().pow(2)).sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn defect_examples() {
        assert_eq!(pt(&[2, 1]).char_defect(3), 1);
        assert_eq!(pt(&[2, 2]).char_defect(2), 2);
        for n in 1..=10u64 {
            for p in [2u64, 3, 5, 7] {
                assert_eq!(
                    Partition::new(vec![n as usize]).char_defect(p),
                    legendre_valuation(n, p)
                );
            }
        }
    }

    #[test]
    fn defect_identity_holds_everywhere() {
        // char_defect asserts the hook route equals the degree route.
        for n in 0..=25 {
            for p in [2u64, 3, 5, 7] {
                for lam in Partition::all(n) {
                    lam.char_defect(p);
                }
            }
        }
    }

    #[test]
    fn core_and_weight_examples() {
        assert_eq!(pt(&[2, 1]).p_core_and_weight(2), (pt(&[2, 1]), 0));
        assert_eq!(pt(&[3]).p_core_and_weight(3), (Partition::empty(), 1));
        for p in [2usize, 3, 5, 7] {
            assert_eq!(pt(&[p]).p_core_and_weight(p), (Partition::empty(), 1));
        }
    }

    #[test]
    fn p_regular_examples() {
        assert!(!pt(&[1, 1]).is_p_regular(2));
        assert!(pt(&[2, 1]).is_p_regular(2));
        assert!(!pt(&[3, 3, 3]).is_p_regular(3));
        assert!(pt(&[3, 3]).is_p_regular(3));
        assert!(Partition::empty().is_p_regular(2));
    }

    /// Exhaustive rim-hook oracle: remove p-hooks in every possible order,
    /// asserting a unique terminal partition independent of the order.
    fn core_by_exhaustive_removal(
        lambda: &Partition,
        p: usize,
        memo: &mut HashMap<Partition, Partition>,
    ) -> Partition {
        if let Some(c) = memo.get(lambda) {
            return c.clone();
        }
        let nexts = rim_hook_removals(lambda, p);
        let core = if nexts.is_empty() {
            lambda.clone()
        } else {
            let cores: HashSet<Partition> =
                nexts.iter().map(|mu| core_by_exhaustive_removal(mu, p, memo)).collect();
            assert_eq!(cores.len(), 1, "order-dependent core for {lambda} at p={p}");
            cores.into_iter().next().unwrap()
        };
        memo.insert(lambda.clone(), core.clone());
        core
    }

    #[test]
    fn core_is_order_independent_and_matches_abacus() {
        for p in [2usize, 3, 5] {
            let mut memo = HashMap::new();
            for n in 0..=20 {
                for lam in Partition::all(n) {
                    let oracle = core_by_exhaustive_removal(&lam, p, &mut memo);
                    let (core, weight) = lam.p_core_and_weight(p);
                    assert_eq!(core, oracle, "lambda={lam} p={p}");
                    assert_eq!(weight * p + core.size(), n);
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let expect = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(Partition::all(n).len(), e);
        }
    }

    #[test]
    fn conjugate_is_involution_and_degree_invariant() {
        for n in 0..=14 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().degree(), lam.degree());
            }
        }
    }

    #[test]
    fn rim_hook_removal_shrinks_by_h() {
        for n in 1..=14 {
            for lam in Partition::all(n) {
                for h in 1..=n {
                    for mu in rim_hook_removals(&lam, h) {
                        assert_eq!(mu.size() + h, n);
                    }
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn abacus_round_trip(n in 0usize..=20, p in 2usize..=7, extra in 0usize..=10, seed in 0usize..1000) {
            let all = Partition::all(n);
            let lam = all[seed % all.len()].clone();
            let b = lam.len() + extra;
            if b > 0 {
                let ab = Abacus::with_beads(&lam, p, b);
                prop_assert_eq!(ab.to_partition(), lam.clone());
            }
            prop_assert_eq!(Abacus::new(&lam, p).to_partition(), lam.clone());
            let (core, w) = lam.p_core_and_weight(p);
            prop_assert_eq!(w * p + core.size(), n);
        }
    }
}
