use super::BladeSystem;
use crate::perm::{canonical_table, table_to_perms, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub system: BladeSystem,
    /// `relabel(b)` is the canonical label of original blade `b`.
    pub relabel: Permutation,
    /// Flattened table `[τ(0), λ(0), ρ(0), τ(1), …]` of the canonical system.
    pub table: Vec<u32>,
}

/// Least breadth-first transition table over all base blades, generators
/// scanned in the order `τ, λ, ρ`. Isomorphism of blade systems is
/// simultaneous conjugacy of the triple; the signature is carried along
/// unchanged and plays no part in the comparison.
pub fn canonical_form(b: &BladeSystem) -> CanonicalForm {
    let (table, relabel) = canonical_table(&b.generators());
    let mut perms = table_to_perms(&table, 3).into_iter();
    let system = BladeSystem::from_parts_unchecked(
        perms.next().expect("tau"),
        perms.next().expect("lambda"),
        perms.next().expect("rho"),
        b.signature(),
    );
    CanonicalForm {
        system,
        relabel,
        table,
    }
}

pub fn is_isomorphic(a: &BladeSystem, b: &BladeSystem) -> bool {
    a.len() == b.len() && canonical_table(&a.generators()).0 == canonical_table(&b.generators()).0
}

impl BladeSystem {
    pub fn is_isomorphic_to(&self, other: &BladeSystem) -> bool {
        is_isomorphic(self, other)
    }

    /// Whether this system is its own canonical form.
    pub fn is_canonical(&self) -> bool {
        canonical_table(&self.generators()).0 == self.table()
    }

    pub fn table(&self) -> Vec<u32> {
        let n = self.len();
        let mut t = Vec::with_capacity(3 * n);
        for i in 0..n {
            for g in self.generators() {
                t.push(g.apply(i) as u32);
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn conjugates_share_a_form() {
        let b = square_path();
        let g = perm(4, "(1 3 2)");
        let c = b.conjugate_by(&g).unwrap();
        assert_eq!(canonical_form(&b).system, canonical_form(&c).system);
        assert!(is_isomorphic(&b, &c));
    }

    #[test]
    fn relabel_produces_the_form() {
        let b = triangle_hypermap();
        let cf = canonical_form(&b);
        assert_eq!(b.conjugate_by(&cf.relabel).unwrap(), cf.system);
        assert!(cf.system.is_canonical());
        assert_eq!(cf.system.table(), cf.table);
    }

    #[test]
    fn disc_is_canonical() {
        assert_eq!(canonical_form(&disc()).system, disc());
    }

    #[test]
    fn generator_order_matters() {
        let s = sig([0, 0, 0]);
        let a = system(2, "(1 2)", "", "", s);
        let b = system(2, "", "(1 2)", "", s);
        assert_ne!(canonical_form(&a).system, canonical_form(&b).system);
        // S2 brute force: neither conjugation carries a to b.
        for g in [Permutation::identity(2), perm(2, "(1 2)")] {
            assert_ne!(a.conjugate_by(&g).unwrap(), b);
        }
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        assert!(!is_isomorphic(&disc(), &sphere()));
    }

    #[test]
    fn hypermap_relabelled_by_transposition() {
        let b = triangle_hypermap();
        let c = b.conjugate_by(&perm(3, "(1 3)")).unwrap();
        assert_ne!(b, c);
        assert!(is_isomorphic(&b, &c));
    }
}
