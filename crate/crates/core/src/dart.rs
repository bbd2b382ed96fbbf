//! Oriented maps without boundary as dart permutations `(x, y)`.
//!
//! `x` is an involution pairing the two darts of an edge (a fixed point is a
//! free edge), `y` rotates the darts around their vertex and `y⁻¹x` runs
//! around a face.

use crate::blade::BladeSystem;
use crate::error::{Error, Result};
use crate::perm::{canonical_table, cycle_count, orbits, OrbitPartition, Permutation};
use crate::triangle::{builtin_signature, BuiltinSignature, Period};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DartMap {
    x: Permutation,
    y: Permutation,
}

pub fn validate_dart(x: Permutation, y: Permutation) -> Result<DartMap> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch {
            left: x.degree(),
            right: y.degree(),
        });
    }
    if !x.is_involution() {
        return Err(Error::NotInvolution { name: "x".into() });
    }
    let part = orbits(&[&x, &y], x.degree())?;
    if part.len() != 1 {
        return Err(Error::NotTransitive { orbits: part.len() });
    }
    Ok(DartMap { x, y })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DartCells {
    pub vertices: OrbitPartition,
    pub edges: OrbitPartition,
    pub faces: OrbitPartition,
    pub free_edges: Vec<usize>,
}

impl DartMap {
    pub fn new(x: Permutation, y: Permutation) -> Result<Self> {
        validate_dart(x, y)
    }

    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, x: &[C], y: &[C]) -> Result<Self> {
        validate_dart(
            Permutation::from_cycles(n, x)?,
            Permutation::from_cycles(n, y)?,
        )
    }

    pub fn len(&self) -> usize {
        self.x.degree()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn x(&self) -> &Permutation {
        &self.x
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    /// `y⁻¹x`, the face permutation.
    pub fn face_permutation(&self) -> Permutation {
        self.y.inverse().compose_unchecked(&self.x)
    }

    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        Ok(DartMap {
            x: self.x.conjugate_by(g)?,
            y: self.y.conjugate_by(g)?,
        })
    }

    /// Canonical `(x, y)` transition table up to relabelling of darts.
    pub fn canonical_table(&self) -> Vec<u32> {
        canonical_table(&[&self.x, &self.y]).0
    }

    pub fn is_isomorphic_to(&self, other: &DartMap) -> bool {
        self.len() == other.len() && self.canonical_table() == other.canonical_table()
    }
}

pub fn dart_cells(d: &DartMap) -> DartCells {
    let n = d.len();
    let face = d.face_permutation();
    DartCells {
        vertices: orbits(&[&d.y], n).expect("same degree"),
        edges: orbits(&[&d.x], n).expect("same degree"),
        faces: orbits(&[&face], n).expect("same degree"),
        free_edges: d.x.fixed_points(),
    }
}

/// `χ = c(x) + c(y) + c(y⁻¹x) − N`. Free ends count as vertices through `c(x)`.
pub fn dart_euler(d: &DartMap) -> Result<i64> {
    let chi = (cycle_count(&d.x) + cycle_count(&d.y) + cycle_count(&d.face_permutation())) as i64
        - d.len() as i64;
    if chi % 2 != 0 {
        return Err(Error::InternalParity { numerator: chi });
    }
    Ok(chi)
}

pub fn dart_genus(d: &DartMap) -> Result<usize> {
    let chi = dart_euler(d)?;
    if chi > 2 {
        return Err(Error::InternalClassification(format!(
            "dart map with chi = {chi}"
        )));
    }
    Ok(((2 - chi) / 2) as usize)
}

/// Blades `Ω × {+, −}` with `(ω, +) ↦ ω` and `(ω, −) ↦ N + ω`:
/// `τ(ω, ε) = (ω, −ε)`, `λ(ω, ε) = (x ω, −ε)`, `ρ(ω, +) = (y⁻¹ ω, −)`,
/// `ρ(ω, −) = (y ω, +)`. The result carries the signature `Γ*(2, ∞, ∞)`.
pub fn to_blades(d: &DartMap) -> BladeSystem {
    let n = d.len();
    let y_inv = d.y.inverse();
    let build = |f: &dyn Fn(usize, bool) -> usize| {
        let images = (0..2 * n).map(|i| f(i % n, i < n)).collect();
        Permutation::from_images(images).expect("bijection on blades")
    };
    let minus = |w: usize| n + w;
    let tau = build(&|w, plus| if plus { minus(w) } else { w });
    let lambda = build(&|w, plus| {
        let xw = d.x.apply(w);
        if plus {
            minus(xw)
        } else {
            xw
        }
    });
    let rho = build(&|w, plus| {
        if plus {
            minus(y_inv.apply(w))
        } else {
            d.y.apply(w)
        }
    });
    let sig = builtin_signature(BuiltinSignature::Map(Period::Infinite, Period::Infinite))
        .expect("valid builtin");
    BladeSystem::new(tau, lambda, rho, sig).expect("blades of a dart map form a map system")
}

fn orient_class(b: &BladeSystem, mirror: bool) -> Result<DartMap> {
    let report = b.boundary();
    let colouring = b.orientation_colouring();
    let colour = match colouring {
        Some(c) if report.count() == 0 => c,
        other => {
            return Err(Error::NotOrientableClosed {
                orientable: other.is_some(),
                boundary: report.count(),
            })
        }
    };
    // Blade 0 has colour `false`.
    let class: Vec<usize> = (0..b.len()).filter(|&i| colour[i] == mirror).collect();
    let mut index = vec![usize::MAX; b.len()];
    for (k, &i) in class.iter().enumerate() {
        index[i] = k;
    }
    let x_full = b.tau_lambda();
    let y_full = b.tau_rho().inverse();
    let restrict = |p: &Permutation| {
        let images = class.iter().map(|&i| index[p.apply(i)]).collect();
        Permutation::from_images(images).expect("rotations preserve the colour class")
    };
    validate_dart(restrict(&x_full), restrict(&y_full))
}

/// Darts are the colour class of blade 1 (0-based blade 0), with
/// `x = τλ` and `y = (τρ)⁻¹` restricted to it.
pub fn orient(b: &BladeSystem) -> Result<DartMap> {
    orient_class(b, false)
}

/// The mirror image: the other colour class.
pub fn orient_mirror(b: &BladeSystem) -> Result<DartMap> {
    orient_class(b, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::fixtures;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn dart(n: usize, x: &str, y: &str) -> DartMap {
        DartMap::new(perm(n, x), perm(n, y)).unwrap()
    }

    // Riemann–Hurwitz form: 2N minus the ramification over the three fibres.
    fn riemann_hurwitz(d: &DartMap) -> i64 {
        let n = d.len() as i64;
        let ram = |p: &Permutation| n - cycle_count(p) as i64;
        2 * n - ram(d.x()) - ram(d.y()) - ram(&d.face_permutation())
    }

    #[test]
    fn validate_examples() {
        assert_eq!(dart(1, "", "").len(), 1);
        assert_eq!(dart(2, "(1 2)", "(1 2)").len(), 2);
        assert_eq!(
            DartMap::new(perm(2, ""), perm(2, "")).unwrap_err(),
            Error::NotTransitive { orbits: 2 }
        );
        assert_eq!(
            DartMap::new(perm(3, "(1 2 3)"), perm(3, "")).unwrap_err(),
            Error::NotInvolution { name: "x".into() }
        );
    }

    #[test]
    fn cell_examples() {
        let c = dart_cells(&dart(1, "", ""));
        assert_eq!(
            (
                c.vertices.len(),
                c.edges.len(),
                c.faces.len(),
                c.free_edges.len()
            ),
            (1, 1, 1, 1)
        );
        let c = dart_cells(&dart(2, "(1 2)", "(1 2)"));
        assert_eq!(
            (
                c.vertices.len(),
                c.edges.len(),
                c.faces.len(),
                c.free_edges.len()
            ),
            (1, 1, 2, 0)
        );
        let c = dart_cells(&dart(2, "(1 2)", ""));
        assert_eq!(
            (
                c.vertices.len(),
                c.edges.len(),
                c.faces.len(),
                c.free_edges.len()
            ),
            (2, 1, 1, 0)
        );
    }

    #[test]
    fn euler_examples() {
        for d in [
            dart(1, "", ""),
            dart(2, "(1 2)", "(1 2)"),
            dart(4, "(1 2)(3 4)", "(1 3 2 4)"),
        ] {
            assert_eq!(dart_euler(&d).unwrap(), riemann_hurwitz(&d));
        }
        assert_eq!(dart_euler(&dart(1, "", "")).unwrap(), 2);
        assert_eq!(dart_genus(&dart(2, "(1 2)", "(1 2)")).unwrap(), 0);
        // (1 2)(3 4) with the 4-cycle (1 3 2 4): one face, a torus.
        assert_eq!(dart_genus(&dart(4, "(1 2)(3 4)", "(1 3 2 4)")).unwrap(), 1);
    }

    #[test]
    fn to_blades_examples() {
        let sphere = to_blades(&dart(1, "", ""));
        assert_eq!(sphere.len(), 2);
        assert!(sphere.is_isomorphic_to(&fixtures::sphere()));
        assert!(sphere.is_isomorphic_to(&fixtures::disc().complex_double().components[0]));

        let loop_map = to_blades(&dart(2, "(1 2)", "(1 2)"));
        assert_eq!(loop_map.len(), 4);
        let t = loop_map.classify().unwrap();
        assert_eq!(t.name(), "sphere");

        let d = dart(4, "(1 2)(3 4)", "(1 3 2 4)");
        let g = perm(4, "(1 4)(2 3)");
        assert!(to_blades(&d).is_isomorphic_to(&to_blades(&d.conjugate_by(&g).unwrap())));
    }

    #[test]
    fn orient_examples() {
        let d = orient(&fixtures::sphere()).unwrap();
        assert_eq!(d, dart(1, "", ""));
        assert_eq!(
            orient(&fixtures::disc()).unwrap_err(),
            Error::NotOrientableClosed {
                orientable: true,
                boundary: 1
            }
        );
        assert!(matches!(
            orient(&fixtures::triangle_hypermap()),
            Err(Error::NotOrientableClosed {
                orientable: false,
                ..
            })
        ));
    }

    #[test]
    fn orient_inverts_to_blades() {
        let d = dart(4, "(1 2)(3 4)", "(1 3 2 4)");
        assert_eq!(orient(&to_blades(&d)).unwrap(), d);
        let m = orient_mirror(&to_blades(&d)).unwrap();
        assert_eq!(dart_genus(&m).unwrap(), 1);
    }
}
