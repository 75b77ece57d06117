//! p-blocks of symmetric groups: enumeration by p-core, the counts k(B) and
//! l(B), block defects and heights, and the per-character bound checks.

use crate::exactnum::legendre_valuation;
use crate::partitions::Partition;
use serde::Serialize;
use std::collections::BTreeMap;

/// One p-block of `S_n`: the partitions sharing a p-core.
#[derive(Clone, Debug, Serialize)]
pub struct BlockDescriptor {
    pub core: Partition,
    pub weight: usize,
    pub members: Vec<Partition>,
    /// Number of ordinary characters in the block.
    pub k: usize,
    /// Number of modular irreducibles, counted as p-regular members.
    pub l: usize,
    /// Block defect `d(B)`, realised as the maximum character defect over
    /// the members; checked against `w + v_p(w!)` (the Sylow subgroup of
    /// `S_{pw}` is a defect group).
    pub block_defect: u64,
}

/// Per-character record inside an [`SnReport`].
#[derive(Clone, Debug, Serialize)]
pub struct CharRecord {
    pub partition: Partition,
    pub block: usize,
    pub defect: u64,
    pub height: u64,
}

/// Everything the symmetric-group sweep knows about one `(n, p)` pair.
#[derive(Clone, Debug, Serialize)]
pub struct SnReport {
    pub n: usize,
    pub p: u64,
    pub blocks: Vec<BlockDescriptor>,
    pub characters: Vec<CharRecord>,
    /// `l(B) * chi(1)_p <= |S_n|_p` for every character, with `l(B)` standing
    /// in for the constituent count.
    pub conj_b: bool,
    /// The per-block refinement `l(B) < p^w` for blocks of weight >= 1.
    pub l_bound: bool,
    /// Every defect-2 character lies in a weight-2 block.
    pub defect2_weight2: bool,
    /// Whether, on this n, every weight-2 block consists solely of defect-2
    /// characters (informational; not asserted anywhere).
    pub defect2_converse: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum SymBlockError {
    #[error("block core {0} is not self-conjugate")]
    BlockNotSelfAssociate(Partition),
}

/// Group the partitions of `n` by p-core. Blocks are sorted by core and the
/// members of each block sorted largest-first, so output is deterministic.
pub fn enumerate_blocks(n: usize, p: u64) -> Vec<BlockDescriptor> {
    let mut by_core: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lam in Partition::all(n) {
        let (core, _) = lam.p_core_and_weight(p as usize);
        by_core.entry(core).or_default().push(lam);
    }
    by_core
        .into_iter()
        .map(|(core, mut members)| {
            members.sort();
            let weight = (n - core.size()) / p as usize;
            let k = members.len();
            let l = members.iter().filter(|m| m.is_p_regular(p)).count();
            let block_defect = members.iter().map(|m| m.char_defect(p)).max().unwrap();
            let expected = weight as u64 + legendre_valuation(weight as u64, p);
            assert_eq!(
                block_defect, expected,
                "block defect disagrees with w + v_p(w!) for core {core} at p={p}"
            );
            BlockDescriptor { core, weight, members, k, l, block_defect }
        })
        .collect()
}

/// Run the full per-character bound check on `S_n` at `p`.
///
/// For every partition the constituent count of the reduced character is
/// bounded above by `l(B)` of its block, so `l(B) <= p^(defect)` suffices;
/// the stronger per-block bound `l(B) < p^w` (weight >= 1) is recorded
/// separately.
pub fn check_conjecture_b_sym(n: usize, p: u64) -> SnReport {
    let blocks = enumerate_blocks(n, p);
    let mut characters = Vec::new();
    let mut conj_b = true;
    let mut l_bound = true;
    let mut defect2_weight2 = true;
    let mut weight2_all_defect2 = true;
    for (bi, block) in blocks.iter().enumerate() {
        if block.weight >= 1 && block.l as u128 >= (p as u128).pow(block.weight as u32) {
            l_bound = false;
        }
        for m in &block.members {
            let defect = m.char_defect(p);
            let height = block.block_defect - defect;
            if (block.l as u128) > (p as u128).pow(defect as u32) {
                conj_b = false;
            }
            if defect == 2 && block.weight != 2 {
                defect2_weight2 = false;
            }
            if block.weight == 2 && defect != 2 {
                weight2_all_defect2 = false;
            }
            characters.push(CharRecord { partition: m.clone(), block: bi, defect, height });
        }
    }
    let has_weight2 = blocks.iter().any(|b| b.weight == 2);
    SnReport {
        n,
        p,
        blocks,
        characters,
        conj_b,
        l_bound,
        defect2_weight2,
        defect2_converse: has_weight2 && weight2_all_defect2,
    }
}

/// Defect-2/weight-2 verdicts for one `(n, p)` pair.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Defect2Report {
    /// Every defect-2 character lies in a weight-2 block.
    pub implication_holds: bool,
    /// Whether any defect-2 character exists at all.
    pub vacuous: bool,
    /// Whether the converse holds on this n (informational only).
    pub converse_holds: bool,
}

pub fn check_defect2_weight2(n: usize, p: u64) -> Defect2Report {
    let report = check_conjecture_b_sym(n, p);
    let vacuous = !report.characters.iter().any(|c| c.defect == 2);
    Defect2Report {
        implication_holds: report.defect2_weight2,
        vacuous,
        converse_holds: report.defect2_converse,
    }
}

/// Count the members of a block that are and are not self-conjugate. For a
/// self-associate weight-2 block at odd p the counts are `((p-1)/2,
/// (p+1)^2/2)`; the caller asserts that. Errors if the core itself is not
/// self-conjugate (the paired-block case).
pub fn alternating_counts(
    block: &BlockDescriptor,
    _p: u64,
) -> Result<(usize, usize), SymBlockError> {
    if !block.core.is_self_conjugate() {
        return Err(SymBlockError::BlockNotSelfAssociate(block.core.clone()));
    }
    let self_associate = block.members.iter().filter(|m| m.is_self_conjugate()).count();
    Ok((self_associate, block.k - self_associate))
}

/// Number of partitions of `w`, by the bounded-part recursion.
pub fn partition_count(w: usize) -> u128 {
    // table[m] = number of partitions of m with parts considered so far
    let mut table = vec![0u128; w + 1];
    table[0] = 1;
    for part in 1..=w {
        for m in part..=w {
            table[m] += table[m - part];
        }
    }
    table[w]
}

/// Modular irreducible count for a 2-block of an alternating group of
/// weight `w`: `pi(w)` for odd w, `pi(w) + pi(w/2)` for even w >= 2, and 1
/// for the weight-0 (defect zero) case. Asserts the `<= 2^(w-1)` bound for
/// `w >= 3`.
pub fn alternating_2block_l(w: usize) -> u128 {
    let l = if w == 0 {
        1
    } else if w % 2 == 1 {
        partition_count(w)
    } else {
        partition_count(w) + partition_count(w / 2)
    };
    if w >= 3 {
        assert!(l <= 1u128 << (w - 1), "l(B) bound fails at weight {w}");
    }
    l
}

/// Number of p-tuples of partitions with total size `w` (the p-quotient
/// count): the independent route to `k(B)` for a weight-w block.
pub fn multipartition_count(p: u64, w: usize) -> u128 {
    // Convolve partition counts p times.
    let mut acc = vec![0u128; w + 1];
    acc[0] = 1;
    let single: Vec<u128> = (0..=w).map(partition_count).collect();
    for _ in 0..p {
        let mut next = vec![0u128; w + 1];
        for (a, &va) in acc.iter().enumerate() {
            if va == 0 {
                continue;
            }
            for b in 0..=w - a {
                next[a + b] += va * single[b];
            }
        }
        acc = next;
    }
    acc[w]
}
