//! Permutations of `{0..n}` and orbit machinery.
//!
//! Points are 0-based inside the crate. The cycle-notation text form and the
//! JSON files use 1-based points; conversion happens only at those edges.
//!
//! Composition follows the left-action convention: `p.compose(&q)` applies
//! `q` first, so `(p ∘ q)(i) = p(q(i))`.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {} occurs twice",
                    i + 1
                )));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation of degree `n` from 1-based disjoint cycles.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} out of range 1..={n}"
                    )));
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in more than one cycle position"
                    )));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `"(1 2)(3 4 5)"`; the empty string is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = inner
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let cycle = inner[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = inner[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = sq.compose_unchecked(&acc);
            }
            sq = sq.compose_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g ∘ self ∘ g⁻¹`, the same permutation with points relabelled by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        check_degree(self.degree(), g.degree())?;
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[g.apply(i)] = g.images[j as usize];
        }
        Ok(Permutation { images })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| self.images[j as usize] == i as u32)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 == j)
            .map(|(i, _)| i)
            .collect()
    }

    /// All cycles (fixed points included), each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// 1-based non-trivial cycles, the encoding used by the JSON files.
    pub fn to_cycle_lists(&self) -> Vec<Vec<usize>> {
        self.cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|i| i + 1).collect())
            .collect()
    }

    /// True when every cycle length divides `bound`.
    pub fn order_divides(&self, bound: u64) -> bool {
        bound > 0
            && self
                .cycles()
                .iter()
                .all(|c| bound.is_multiple_of(c.len() as u64))
    }
}

fn check_degree(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DegreeMismatch { left, right })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.to_cycle_lists() {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]({})", self.degree(), self)
    }
}

/// Partition of `{0..degree}` into blocks, each sorted, ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    degree: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, point: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&point).is_ok())
    }
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

/// Number of cycles, fixed points counted as 1-cycles.
pub fn cycle_count(p: &Permutation) -> usize {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p.apply(i);
        }
    }
    count
}

pub fn orbits(gens: &[&Permutation], n: usize) -> Result<OrbitPartition> {
    for g in gens {
        check_degree(n, g.degree())?;
    }
    let mut block_id = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if block_id[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut block = vec![start];
        block_id[start] = id;
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let j = g.apply(i);
                if block_id[j] == usize::MAX {
                    block_id[j] = id;
                    block.push(j);
                    queue.push_back(j);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(OrbitPartition { degree: n, blocks })
}

pub fn is_transitive(gens: &[&Permutation], n: usize) -> Result<bool> {
    Ok(orbits(gens, n)?.len() == 1)
}

/// Least `k ≥ 1` with `p^k = id`, the lcm of the cycle lengths.
/// Saturates at `u64::MAX`.
pub fn element_order(p: &Permutation) -> u64 {
    p.cycles().iter().fold(1u64, |acc, c| {
        let len = c.len() as u64;
        let g = acc.gcd(&len);
        (acc / g).saturating_mul(len)
    })
}

/// Breadth-first relabelling of a transitive action from `base`: points are
/// numbered in discovery order, scanning generators in the given order.
/// Returns the relabelled transition table (row-major, one row per point)
/// and the relabelling `old -> new`.
pub(crate) fn bfs_relabel(gens: &[&Permutation], base: usize) -> (Vec<u32>, Vec<u32>) {
    let n = gens[0].degree();
    let k = gens.len();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[base] = 0;
    order.push(base);
    let mut head = 0;
    while head < order.len() {
        let i = order[head];
        head += 1;
        for g in gens {
            let j = g.apply(i);
            if label[j] == u32::MAX {
                label[j] = order.len() as u32;
                order.push(j);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "bfs_relabel needs a transitive action");
    let mut table = vec![0u32; n * k];
    for (new, &old) in order.iter().enumerate() {
        for (gi, g) in gens.iter().enumerate() {
            table[new * k + gi] = label[g.apply(old)];
        }
    }
    (table, label)
}

/// Canonical transition table of a transitive action up to simultaneous
/// conjugation: the lexicographically least breadth-first table over all
/// base points. Returns the table and the relabelling that produces it.
pub(crate) fn canonical_table(gens: &[&Permutation]) -> (Vec<u32>, Permutation) {
    let n = gens[0].degree();
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    for base in 0..n {
        let (table, label) = bfs_relabel(gens, base);
        if best.as_ref().is_none_or(|(b, _)| table < *b) {
            best = Some((table, label));
        }
    }
    let (table, label) = best.expect("degree is positive");
    let relabel = Permutation { images: label };
    (table, relabel)
}

/// Splits a row-major transition table back into permutations.
pub(crate) fn table_to_perms(table: &[u32], k: usize) -> Vec<Permutation> {
    let n = table.len() / k;
    (0..k)
        .map(|g| Permutation {
            images: (0..n).map(|i| table[i * k + g]).collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    // Independent image-table oracle for composition.
    fn brute_compose(p: &[usize], q: &[usize]) -> Vec<usize> {
        (0..q.len()).map(|i| p[q[i]]).collect()
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        let a = p(3, "(1 2)");
        assert_eq!(compose(&id, &a).unwrap(), a);
        assert!(compose(&a, &a).unwrap().is_identity());

        let b = p(3, "(2 3)");
        let expected = brute_compose(&[1, 0, 2], &[0, 2, 1]);
        assert_eq!(expected, vec![1, 2, 0]);
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.images().collect::<Vec<_>>(), expected);
        assert_eq!(ab.to_string(), "(1 2 3)");
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = compose(&Permutation::identity(2), &Permutation::identity(3)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn cycle_count_examples() {
        assert_eq!(cycle_count(&Permutation::identity(3)), 3);
        assert_eq!(cycle_count(&p(2, "(1 2)")), 1);
        assert_eq!(cycle_count(&p(6, "(1 2)(4 5 6)")), 3);
    }

    #[test]
    fn orbit_examples() {
        let id = Permutation::identity(3);
        assert_eq!(
            orbits(&[&id], 3).unwrap().blocks(),
            &[vec![0], vec![1], vec![2]]
        );
        let a = p(3, "(1 2)");
        assert_eq!(orbits(&[&a], 3).unwrap().blocks(), &[vec![0, 1], vec![2]]);
        let b = p(3, "(2 3)");
        assert_eq!(orbits(&[&a, &b], 3).unwrap().blocks(), &[vec![0, 1, 2]]);
        assert!(matches!(
            orbits(&[&a], 4),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&[&p(2, "(1 2)")], 2).unwrap());
        assert!(!is_transitive(&[&Permutation::identity(2)], 2).unwrap());
        assert!(is_transitive(&[&p(4, "(1 2)(3 4)"), &p(4, "(2 3)")], 4).unwrap());
    }

    #[test]
    fn element_order_examples() {
        assert_eq!(element_order(&Permutation::identity(4)), 1);
        assert_eq!(element_order(&p(5, "(1 2)(3 4 5)")), 6);
        assert_eq!(element_order(&p(3, "(1 2 3)")), 3);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let a = p(7, "(3 4 5)(1 2)");
        assert_eq!(a.to_string(), "(1 2)(3 4 5)");
        assert_eq!(Permutation::parse_cycles(7, &a.to_string()).unwrap(), a);
        assert!(p(4, "").is_identity());
        assert_eq!(Permutation::identity(4).to_string(), "");
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn conjugation_relabels() {
        let a = p(3, "(1 2)");
        let g = p(3, "(1 3)");
        assert_eq!(a.conjugate_by(&g).unwrap(), p(3, "(2 3)"));
    }

    #[test]
    fn canonical_table_is_conjugation_invariant() {
        let a = p(4, "(1 2)(3 4)");
        let b = p(4, "(2 3)");
        let g = p(4, "(1 4 2)");
        let (t1, r1) = canonical_table(&[&a, &b]);
        let a2 = a.conjugate_by(&g).unwrap();
        let b2 = b.conjugate_by(&g).unwrap();
        let (t2, _) = canonical_table(&[&a2, &b2]);
        assert_eq!(t1, t2);
        let back = table_to_perms(&t1, 2);
        assert_eq!(back[0], a.conjugate_by(&r1).unwrap());
        assert_eq!(back[1], b.conjugate_by(&r1).unwrap());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
            (1..=max_n)
                .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
                .prop_map(|v| Permutation::from_images(v).unwrap())
        }

        proptest! {
            #[test]
            fn inverse_composes_to_identity(a in perm(32)) {
                prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
                prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
            }

            #[test]
            fn cycle_count_is_class_function(
                (a, g) in perm(32).prop_flat_map(|a| {
                    let n = a.degree();
                    (Just(a), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
                })
            ) {
                let g = Permutation::from_images(g).unwrap();
                let c = cycle_count(&a);
                prop_assert_eq!(c, cycle_count(&a.inverse()));
                prop_assert_eq!(c, cycle_count(&a.conjugate_by(&g).unwrap()));
            }

            #[test]
            fn orbit_blocks_cover_points(a in perm(32), b in perm(32)) {
                if a.degree() == b.degree() {
                    let n = a.degree();
                    let part = orbits(&[&a, &b], n).unwrap();
                    prop_assert_eq!(part.blocks().iter().map(Vec::len).sum::<usize>(), n);
                }
            }

            #[test]
            fn element_order_is_least(a in perm(32)) {
                let k = element_order(&a);
                prop_assert!(a.pow(k as i64).is_identity());
                for j in 1..k.min(2000) {
                    prop_assert!(!a.pow(j as i64).is_identity());
                }
            }
        }
    }
}
