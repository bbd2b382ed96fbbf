mod common;

use common::{cw_oracle, random_permutation, random_system, OracleSurface};
use kleinmaps::census::{enumerate_level, CensusQuery};
use kleinmaps::{BladeSystem, TriangleSignature};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn as_oracle(b: &BladeSystem) -> OracleSurface {
    let s = b.classify().unwrap();
    OracleSurface {
        euler: s.euler,
        orientable: s.orientable,
        boundary: s.boundary,
        genus_or_crosscaps: s.genus_or_crosscaps,
    }
}

fn system(n: usize, tau: &str, lambda: &str, rho: &str) -> BladeSystem {
    let p = |s| kleinmaps::Permutation::parse_cycles(n, s).unwrap();
    BladeSystem::new(
        p(tau),
        p(lambda),
        p(rho),
        TriangleSignature::unconstrained(),
    )
    .unwrap()
}

#[test]
fn oracle_on_named_systems() {
    let cases = [
        (system(1, "", "", ""), (1, true, 1, 0)),
        (system(2, "(1 2)", "(1 2)", "(1 2)"), (2, true, 0, 0)),
        (system(3, "(1 2)", "(1 3)", "(2 3)"), (0, false, 1, 1)),
        (
            system(4, "(1 2)(3 4)", "(1 4)(2 3)", "(1 3)(2 4)"),
            (1, false, 0, 1),
        ),
        (system(4, "(1 2)(3 4)", "(1 4)(2 3)", ""), (1, true, 1, 0)),
        (system(2, "", "", "(1 2)"), (1, true, 1, 0)),
    ];
    for (b, (e, o, bd, g)) in cases {
        let want = OracleSurface {
            euler: e,
            orientable: o,
            boundary: bd,
            genus_or_crosscaps: g,
        };
        assert_eq!(cw_oracle(&b), want, "oracle on {b:?}");
        assert_eq!(as_oracle(&b), want, "classify on {b:?}");
    }
}

#[test]
fn classify_matches_oracle_on_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let b = random_system(&mut rng, 40);
        assert_eq!(as_oracle(&b), cw_oracle(&b), "{b:?}");
    }
}

#[test]
fn classify_matches_oracle_exhaustively() {
    let q = CensusQuery::new(6, TriangleSignature::unconstrained());
    for n in 1..=6 {
        for rec in enumerate_level(&q, n).unwrap() {
            assert_eq!(as_oracle(&rec.system), cw_oracle(&rec.system));
        }
    }
}

#[test]
fn invariants_survive_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let b = random_system(&mut rng, 30);
        let g = random_permutation(&mut rng, b.len());
        let c = b.conjugate_by(&g).unwrap();
        assert_eq!(b.classify().unwrap(), c.classify().unwrap());
        assert_eq!(b.passport(), c.passport());
        assert_eq!(b.map_type(), c.map_type());
        assert_eq!(b.boundary().count(), c.boundary().count());
        assert!(b.is_isomorphic_to(&c));
        assert_eq!(b.canonical_form().system, c.canonical_form().system);
    }
}
