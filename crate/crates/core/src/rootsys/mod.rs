//! Indecomposable root systems, positive-root counts, and maximal closed
//! subsystems by extended-diagram node deletion.
//!
//! Roots are kept as integer coordinate vectors over the simple-root basis;
//! the bilinear form is carried by a symmetrised Gram matrix, so everything
//! stays in exact integer arithmetic.

mod arith;

pub use arith::{centralizer_shapes, coxeter_series_invariants, CentralizerShape, CoxeterInvariants};

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CartanLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RootSysError {
    #[error("no indecomposable root system of type {0}{1}")]
    InvalidType(CartanLetter, usize),
}

/// An indecomposable root system with its positive roots in simple-root
/// coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub letter: CartanLetter,
    pub rank: usize,
    /// Cartan matrix, `cartan[i][j] = 2(a_i, a_j)/(a_i, a_i)`.
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrised Gram matrix (twice the inner products, scaled to integers).
    pub gram: Vec<Vec<i64>>,
    /// Positive roots, coordinates over the simple roots; simple root `i`
    /// is the `i`-th unit vector.
    pub positive_roots: Vec<Vec<i64>>,
    /// Coordinates of the highest root (the marks of the extended diagram).
    pub highest_root: Vec<i64>,
}

/// A closed proper subsystem produced by node deletion, recorded up to the
/// multiset of its component types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsystemRecord {
    /// Component Cartan types, sorted.
    pub components: Vec<(CartanLetter, usize)>,
    /// Total number of positive roots.
    pub n_psi: usize,
    /// How the subsystem was obtained (node deletion path).
    pub obtained: String,
}

impl SubsystemRecord {
    pub fn type_string(&self) -> String {
        if self.components.is_empty() {
            return "empty".to_string();
        }
        self.components
            .iter()
            .map(|(l, r)| format!("{l}{r}"))
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// Closed-form positive root count per type.
pub fn closed_formula_count(letter: CartanLetter, rank: usize) -> usize {
    match letter {
        CartanLetter::A => rank * (rank + 1) / 2,
        CartanLetter::B | CartanLetter::C => rank * rank,
        CartanLetter::D => rank * rank - rank,
        CartanLetter::G => 6,
        CartanLetter::F => 24,
        CartanLetter::E => match rank {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => unreachable!(),
        },
    }
}

fn cartan_and_symmetrizer(
    letter: CartanLetter,
    rank: usize,
) -> Result<(Vec<Vec<i64>>, Vec<i64>), RootSysError> {
    use CartanLetter::*;
    let valid = match letter {
        A => rank >= 1,
        B => rank >= 2,
        C => rank >= 3,
        D => rank >= 4,
        G => rank == 2,
        F => rank == 4,
        E => (6..=8).contains(&rank),
    };
    if !valid {
        return Err(RootSysError::InvalidType(letter, rank));
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut d = vec![1i64; n];
    match letter {
        A => {
            for i in 0..n - 1 {
                chain(&mut a, i, i + 1);
            }
        }
        B => {
            for i in 0..n - 1 {
                chain(&mut a, i, i + 1);
            }
            // short last node
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
            for di in d.iter_mut().take(n - 1) {
                *di = 2;
            }
        }
        C => {
            for i in 0..n - 1 {
                chain(&mut a, i, i + 1);
            }
            // long last node
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
            d[n - 1] = 2;
        }
        D => {
            for i in 0..n - 2 {
                chain(&mut a, i, i + 1);
            }
            chain(&mut a, n - 3, n - 1);
        }
        G => {
            // node 0 short, node 1 long
            a[0][1] = -3;
            a[1][0] = -1;
            d = vec![1, 3];
        }
        F => {
            // nodes 0,1 long; 2,3 short; double bond between 1 and 2
            chain(&mut a, 0, 1);
            chain(&mut a, 2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        E => {
            // chain 0-2-3-4-..., node 1 hangs off node 3
            chain(&mut a, 0, 2);
            chain(&mut a, 2, 3);
            chain(&mut a, 1, 3);
            for i in 3..n - 1 {
                chain(&mut a, i, i + 1);
            }
        }
    }
    Ok((a, d))
}

/// Build the root system: generate the full root set as the reflection orbit
/// of the simple roots, and check the count against the closed formula.
pub fn build(letter: CartanLetter, rank: usize) -> Result<RootSystem, RootSysError> {
    let (cartan, d) = cartan_and_symmetrizer(letter, rank)?;
    let n = rank;
    let gram: Vec<Vec<i64>> =
        (0..n).map(|i| (0..n).map(|j| d[i] * cartan[i][j]).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!(gram[i][j], gram[j][i]);
        }
    }

    let mut roots: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        roots.insert(v.clone());
        queue.push(v);
    }
    while let Some(v) = queue.pop() {
        for i in 0..n {
            // s_i(v) = v - <v, a_i^vee> a_i
            let pairing: i64 = (0..n).map(|j| cartan[i][j] * v[j]).sum();
            let mut w = v.clone();
            w[i] -= pairing;
            if roots.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    let positive_roots: Vec<Vec<i64>> =
        roots.iter().filter(|v| v.iter().all(|&c| c >= 0)).cloned().collect();
    assert_eq!(roots.len(), 2 * positive_roots.len());
    assert_eq!(
        positive_roots.len(),
        closed_formula_count(letter, rank),
        "positive root count mismatch for {letter}{rank}"
    );
    let highest_root = positive_roots
        .iter()
        .max_by_key(|v| v.iter().sum::<i64>())
        .cloned()
        .unwrap();
    Ok(RootSystem { letter, rank, cartan, gram, positive_roots, highest_root })
}

impl RootSystem {
    pub fn positive_count(&self) -> usize {
        self.positive_roots.len()
    }

    fn inner(&self, v: &[i64], w: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if v[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += v[i] * self.gram[i][j] * w[j];
            }
        }
        s
    }

    fn norm(&self, v: &[i64]) -> i64 {
        self.inner(v, v)
    }

    /// Membership coefficients of a root in the generator set left after a
    /// deletion. `deleted` is the removed simple node; `extended` keeps the
    /// lowest root as an extra generator. Returns, per generator slot, the
    /// coefficient, or `None` if the root is not an integer combination.
    fn deletion_members(&self, deleted: usize, extended: bool) -> Vec<(usize, Vec<i64>)> {
        // Generator slots: ordinary nodes (by index, skipping `deleted`),
        // plus a final slot for the lowest root when `extended`.
        let theta = &self.highest_root;
        let mut out = Vec::new();
        for (ri, r) in self.positive_roots.iter().enumerate() {
            let mut coeffs = vec![0i64; self.rank + 1];
            if extended {
                // r = c0 * (-theta) + sum_{j != deleted} c_j a_j has the
                // unique solution c0 = -r_i/theta_i, c_j = r_j + c0 theta_j;
                // membership in the integer span needs theta_i | r_i only.
                if r[deleted] % theta[deleted] != 0 {
                    continue;
                }
                let c0 = -r[deleted] / theta[deleted];
                coeffs[self.rank] = c0;
                for j in 0..self.rank {
                    if j != deleted {
                        coeffs[j] = r[j] + c0 * theta[j];
                    }
                }
            } else {
                if r[deleted] != 0 {
                    continue;
                }
                coeffs[..self.rank].copy_from_slice(r);
            }
            out.push((ri, coeffs));
        }
        out
    }

    /// Classify one connected component of a deletion subsystem from its
    /// rank, its positive-root count and its norm profile.
    fn classify_component(&self, rank: usize, count: usize, norms: &[i64]) -> (CartanLetter, usize) {
        use CartanLetter::*;
        let min_norm = *norms.iter().min().unwrap();
        let max_norm = *norms.iter().max().unwrap();
        if min_norm == max_norm {
            // simply laced within the component
            return if count == rank * (rank + 1) / 2 {
                (A, rank)
            } else if rank >= 4 && count == rank * rank - rank {
                (D, rank)
            } else if rank == 6 && count == 36 || rank == 7 && count == 63 || rank == 8 && count == 120
            {
                (E, rank)
            } else {
                panic!("unrecognised simply-laced component: rank {rank}, {count} roots")
            };
        }
        let short = norms.iter().filter(|&&x| x == min_norm).count();
        if rank == 2 && count == 6 {
            (G, 2)
        } else if rank == 4 && count == 24 {
            (F, 4)
        } else if count == rank * rank {
            if rank == 2 || short == rank {
                (B, rank)
            } else {
                assert_eq!(short, rank * rank - rank, "ambiguous doubly-laced component");
                (C, rank)
            }
        } else {
            panic!("unrecognised component: rank {rank}, {count} roots")
        }
    }

    fn record_for_deletion(&self, deleted: usize, extended: bool, label: String) -> SubsystemRecord {
        let members = self.deletion_members(deleted, extended);
        // Generators present: nodes != deleted, plus the affine slot.
        let mut slots: Vec<usize> = (0..self.rank).filter(|&j| j != deleted).collect();
        if extended {
            slots.push(self.rank);
        }
        // Adjacency between generator slots via the bilinear form.
        let vec_of = |slot: usize| -> Vec<i64> {
            if slot == self.rank {
                self.highest_root.iter().map(|c| -c).collect()
            } else {
                let mut v = vec![0i64; self.rank];
                v[slot] = 1;
                v
            }
        };
        let mut comp_id: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = 0;
        for &s in &slots {
            if comp_id.contains_key(&s) {
                continue;
            }
            let mut stack = vec![s];
            comp_id.insert(s, next);
            while let Some(t) = stack.pop() {
                for &u in &slots {
                    if !comp_id.contains_key(&u) && self.inner(&vec_of(t), &vec_of(u)) != 0 {
                        comp_id.insert(u, next);
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        // Partition member roots by the component of their support.
        let mut comp_counts = vec![0usize; next];
        let mut comp_norms: Vec<Vec<i64>> = vec![Vec::new(); next];
        for (ri, coeffs) in &members {
            let slot = slots.iter().find(|&&s| coeffs[s] != 0);
            if let Some(&s) = slot {
                let cid = comp_id[&s];
                comp_counts[cid] += 1;
                comp_norms[cid].push(self.norm(&self.positive_roots[*ri]));
            }
        }
        let mut components = Vec::new();
        for cid in 0..next {
            let rank = slots.iter().filter(|&&s| comp_id[&s] == cid).count();
            if comp_counts[cid] == 0 {
                // A generator with no member roots cannot happen: the
                // generator itself (or its negative) is a member.
                unreachable!("component without roots");
            }
            components.push(self.classify_component(rank, comp_counts[cid], &comp_norms[cid]));
        }
        components.sort();
        SubsystemRecord { components, n_psi: members.len(), obtained: label }
    }

    /// All maximal closed proper subsystems up to component-type multiset:
    /// extended-diagram deletions at prime marks, plus ordinary single-node
    /// deletions. Duplicates merged, output sorted.
    pub fn maximal_subsystems(&self) -> Vec<SubsystemRecord> {
        let mut seen: BTreeMap<Vec<(CartanLetter, usize)>, SubsystemRecord> = BTreeMap::new();
        for i in 0..self.rank {
            let mark = self.highest_root[i];
            if crate::exactnum::is_prime(mark as u64) && mark > 1 {
                let rec = self.record_for_deletion(
                    i,
                    true,
                    format!("extended diagram minus node {i} (mark {mark})"),
                );
                seen.entry(rec.components.clone()).or_insert(rec);
            }
        }
        for i in 0..self.rank {
            let rec = self.record_for_deletion(i, false, format!("diagram minus node {i}"));
            seen.entry(rec.components.clone()).or_insert(rec);
        }
        let mut out: Vec<SubsystemRecord> = seen.into_values().collect();
        out.sort_by(|x, y| y.n_psi.cmp(&x.n_psi).then_with(|| x.components.cmp(&y.components)));
        out
    }

    /// Maximum positive-root count over maximal closed proper subsystems
    /// (by monotonicity, over all proper closed subsystems), with a witness.
    /// Asserts the rank gap bound `N(phi) - N_max >= rank`.
    pub fn max_proper_n(&self) -> (usize, SubsystemRecord) {
        let subs = self.maximal_subsystems();
        let best = subs.into_iter().max_by_key(|r| r.n_psi).expect("rank >= 1 has deletions");
        assert!(
            self.positive_count() - best.n_psi >= self.rank,
            "rank gap violated for {}{}",
            self.letter,
            self.rank
        );
        (best.n_psi, best)
    }
}

/// Every indecomposable type up to `rank_bound`, exceptionals included,
/// without the B/C rank-2,3 aliases.
pub fn all_types(rank_bound: usize) -> Vec<(CartanLetter, usize)> {
    use CartanLetter::*;
    let mut out = Vec::new();
    for n in 1..=rank_bound {
        out.push((A, n));
    }
    for n in 2..=rank_bound {
        out.push((B, n));
    }
    for n in 3..=rank_bound {
        out.push((C, n));
    }
    for n in 4..=rank_bound {
        out.push((D, n));
    }
    out.push((G, 2));
    out.push((F, 4));
    for n in 6..=8 {
        out.push((E, n));
    }
    out
}

/// Scan for types admitting a proper closed subsystem within rank-gap
/// `f * (N(phi) - N_max) <= 2`; returns `(letter, rank, max f)`.
pub fn prop53_filter(rank_bound: usize) -> Vec<(CartanLetter, usize, u32)> {
    let mut out = Vec::new();
    for (letter, rank) in all_types(rank_bound) {
        let rs = build(letter, rank).unwrap();
        let (nmax, _) = rs.max_proper_n();
        let gap = rs.positive_count() - nmax;
        if gap <= 2 {
            out.push((letter, rank, (2 / gap) as u32));
        }
    }
    out
}

/// One row of the bundled reference table of subsystem gaps, used by the
/// CLI to flag disagreements between computed and tabulated values.
#[derive(Clone, Debug, Serialize)]
pub struct Table2Row {
    pub letter: CartanLetter,
    pub rank: usize,
    pub n_phi: usize,
    pub max_n_psi: usize,
    pub gap: usize,
    pub reference_max_n_psi: usize,
    pub reference_gap: usize,
    pub max_agrees: bool,
    pub gap_agrees: bool,
}

/// Reference values for `max N(Psi)` and the gap, as tabulated in the
/// bundled table. The computed values win on disagreement; rows that differ
/// are flagged, not silenced.
fn reference_cells(letter: CartanLetter, rank: usize) -> (usize, usize) {
    use CartanLetter::*;
    match letter {
        A => (rank * (rank - 1) / 2, rank),
        B | C => (rank * rank - rank, rank),
        D => (rank * rank - 3 * rank + 2, 2 * rank - 2),
        G => (2, 4),
        F => (16, 8),
        E => match rank {
            6 => (20, 16),
            7 => (36, 27),
            8 => (64, 56),
            _ => unreachable!(),
        },
    }
}

pub fn table2(rank_bound: usize) -> Vec<Table2Row> {
    all_types(rank_bound)
        .into_iter()
        .map(|(letter, rank)| {
            let rs = build(letter, rank).unwrap();
            let n_phi = rs.positive_count();
            let (max_n_psi, _) = rs.max_proper_n();
            let gap = n_phi - max_n_psi;
            let (ref_max, ref_gap) = reference_cells(letter, rank);
            Table2Row {
                letter,
                rank,
                n_phi,
                max_n_psi,
                gap,
                reference_max_n_psi: ref_max,
                reference_gap: ref_gap,
                max_agrees: max_n_psi == ref_max,
                gap_agrees: gap == ref_gap,
            }
        })
        .collect()
}

/// Recursively expand maximal subsystems at the level of type multisets.
/// Returns every multiset reachable from the given type, the type itself
/// excluded. Meant for small ranks; the CLI exposes it behind a flag.
pub fn subsystem_type_closure(
    letter: CartanLetter,
    rank: usize,
) -> std::collections::BTreeSet<Vec<(CartanLetter, usize)>> {
    fn expand(
        t: (CartanLetter, usize),
        memo: &mut BTreeMap<(CartanLetter, usize), std::collections::BTreeSet<Vec<(CartanLetter, usize)>>>,
    ) -> std::collections::BTreeSet<Vec<(CartanLetter, usize)>> {
        if let Some(s) = memo.get(&t) {
            return s.clone();
        }
        let mut out = std::collections::BTreeSet::new();
        let canonical = |l: CartanLetter, r: usize| -> (CartanLetter, usize) {
            use CartanLetter::*;
            match (l, r) {
                (C, 2) => (B, 2),
                (B, 1) | (C, 1) => (A, 1),
                (D, 3) => (A, 3),
                other => other,
            }
        };
        let (l, r) = canonical(t.0, t.1);
        let rs = build(l, r).unwrap();
        for rec in rs.maximal_subsystems() {
            let comps: Vec<(CartanLetter, usize)> =
                rec.components.iter().map(|&(cl, cr)| canonical(cl, cr)).collect();
            out.insert(comps.clone());
            // expand each component and splice the others back in
            for (idx, &c) in comps.iter().enumerate() {
                for sub in expand(c, memo) {
                    let mut glued: Vec<(CartanLetter, usize)> = comps
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != idx)
                        .map(|(_, &x)| x)
                        .chain(sub)
                        .collect();
                    glued.sort();
                    out.insert(glued);
                }
            }
        }
        memo.insert(t, out.clone());
        out
    }
    let mut memo = BTreeMap::new();
    expand((letter, rank), &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use CartanLetter::*;

    #[test]
    fn counts_match_closed_formula() {
        for (l, r) in all_types(12) {
            let rs = build(l, r).unwrap();
            assert_eq!(rs.positive_count(), closed_formula_count(l, r), "{l}{r}");
        }
    }

    #[test]
    fn build_examples() {
        assert_eq!(build(A, 3).unwrap().positive_count(), 6);
        assert_eq!(build(G, 2).unwrap().positive_count(), 6);
        assert_eq!(build(E, 8).unwrap().positive_count(), 120);
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(build(E, 9).is_err());
        assert!(build(D, 3).is_err());
        assert!(build(G, 3).is_err());
    }

    #[test]
    fn highest_root_marks() {
        assert_eq!(build(G, 2).unwrap().highest_root, vec![3, 2]);
        assert_eq!(build(F, 4).unwrap().highest_root, vec![2, 3, 4, 2]);
        assert_eq!(build(B, 4).unwrap().highest_root, vec![1, 2, 2, 2]);
        assert_eq!(build(E, 8).unwrap().highest_root.iter().sum::<i64>(), 29);
    }

    #[test]
    fn f4_contains_b4() {
        let rs = build(F, 4).unwrap();
        let subs = rs.maximal_subsystems();
        let b4 = subs.iter().find(|s| s.components == vec![(B, 4)]).expect("B4 in F4");
        assert_eq!(b4.n_psi, 16);
    }

    #[test]
    fn e8_contains_e7_a1() {
        let rs = build(E, 8).unwrap();
        let subs = rs.maximal_subsystems();
        let rec = subs.iter().find(|s| s.components == vec![(A, 1), (E, 7)]).expect("E7+A1");
        assert_eq!(rec.n_psi, 64);
    }

    #[test]
    fn a_n_maximal_subsystems() {
        for n in 2..=8 {
            let rs = build(A, n).unwrap();
            let (nmax, wit) = rs.max_proper_n();
            assert_eq!(nmax, n * (n - 1) / 2, "A{n}");
            assert_eq!(wit.components, vec![(A, n - 1)]);
            let subs = rs.maximal_subsystems();
            for k in 1..=n - 1 {
                // A_{k-1} x A_{n-k} x (nothing) from deleting node k-1
                let mut expect = vec![];
                if k >= 2 {
                    expect.push((A, k - 1));
                }
                if n - k >= 1 {
                    expect.push((A, n - k));
                }
                expect.sort();
                assert!(
                    subs.iter().any(|s| s.components == expect),
                    "missing {expect:?} in A{n}"
                );
            }
        }
    }

    #[test]
    fn gap_examples() {
        let d5 = build(D, 5).unwrap();
        let (nmax, _) = d5.max_proper_n();
        assert_eq!(d5.positive_count() - nmax, 8);

        let b4 = build(B, 4).unwrap();
        let (nmax, wit) = b4.max_proper_n();
        assert_eq!(b4.positive_count() - nmax, 4);
        assert_eq!(wit.components, vec![(D, 4)]);

        let e6 = build(E, 6).unwrap();
        let (nmax, _) = e6.max_proper_n();
        assert_eq!(e6.positive_count() - nmax, 16);
    }

    #[test]
    fn rank_gap_bound_everywhere() {
        for (l, r) in all_types(12) {
            let rs = build(l, r).unwrap();
            rs.max_proper_n(); // asserts the bound internally
        }
    }

    #[test]
    fn g2_computed_cells_disagree_with_reference() {
        let rows = table2(4);
        let g2 = rows.iter().find(|r| r.letter == G).unwrap();
        // The long-root A2 gives 3 positive roots, gap 3; the bundled table
        // says (2, 4). Both satisfy the rank bound; the disagreement is
        // flagged rather than silenced.
        assert_eq!(g2.max_n_psi, 3);
        assert_eq!(g2.gap, 3);
        assert!(!g2.max_agrees);
        assert!(!g2.gap_agrees);
        let g2sys = build(G, 2).unwrap();
        let subs = g2sys.maximal_subsystems();
        let a2 = subs.iter().find(|s| s.components == vec![(A, 2)]).expect("long A2");
        assert_eq!(a2.n_psi, 3);
    }

    #[test]
    fn all_other_cells_agree_with_reference() {
        for row in table2(12) {
            if row.letter == G {
                continue;
            }
            assert!(row.max_agrees && row.gap_agrees, "{}{} disagrees", row.letter, row.rank);
        }
    }

    #[test]
    fn prop53_filter_exact_output() {
        let got = prop53_filter(12);
        assert_eq!(got, vec![(A, 1, 2), (A, 2, 1), (B, 2, 1)]);
    }

    #[test]
    fn subsystems_are_closed_in_exceptional_types() {
        for (l, r) in [(G, 2), (F, 4), (E, 6), (E, 7), (E, 8)] {
            let rs = build(l, r).unwrap();
            for i in 0..rs.rank {
                for extended in [false, true] {
                    if extended && !crate::exactnum::is_prime(rs.highest_root[i] as u64) {
                        continue;
                    }
                    let members = rs.deletion_members(i, extended);
                    let member_set: std::collections::BTreeSet<&Vec<i64>> =
                        members.iter().map(|(ri, _)| &rs.positive_roots[*ri]).collect();
                    // closure: if r, s are members (as +- roots) and r+s is a
                    // root, then r+s is a member
                    let signed: Vec<Vec<i64>> = member_set
                        .iter()
                        .flat_map(|v| {
                            [(*v).clone(), v.iter().map(|c| -c).collect::<Vec<i64>>()]
                        })
                        .collect();
                    let all_roots: std::collections::BTreeSet<Vec<i64>> = rs
                        .positive_roots
                        .iter()
                        .flat_map(|v| [v.clone(), v.iter().map(|c| -c).collect()])
                        .collect();
                    let signed_set: std::collections::BTreeSet<&Vec<i64>> = signed.iter().collect();
                    for x in &signed {
                        for y in &signed {
                            let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                            if all_roots.contains(&sum) {
                                assert!(
                                    signed_set.contains(&sum),
                                    "{l}{r}: subsystem not closed at deletion {i} ext={extended}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subsystem_type_closure_of_g2() {
        let closure = subsystem_type_closure(G, 2);
        assert!(closure.contains(&vec![(A, 2)]));
        assert!(closure.contains(&vec![(A, 1), (A, 1)]));
        assert!(closure.contains(&vec![(A, 1)]));
        assert!(closure.contains(&vec![]));
    }
}
