//! Blade systems: three involutions `τ, λ, ρ` acting transitively on blades.
//!
//! A blade system is a finite transitive action of an extended triangle group
//! `Γ*(l0, l1, l∞)` under the fixed assignment
//!
//! | generator | reflection |
//! |-----------|------------|
//! | `ρ`       | `r0`       |
//! | `λ`       | `r1`       |
//! | `τ`       | `r∞`       |
//!
//! so that the products `τλ`, `τρ`, `ρλ` are constrained by `l0`, `l1`, `l∞`
//! respectively. For a map group `Γ*(2, m, n)` this reads
//! `(τλ)² = (τρ)^m = (ρλ)^n = 1`.

mod boundary;
mod canonical;
mod double;

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{cycle_count, element_order, orbits, OrbitPartition, Permutation};
use crate::triangle::{Period, ReflectionAction, TriangleSignature};

pub use boundary::{boundary, BoundaryReport, FixedPair};
pub use canonical::{canonical_form, is_isomorphic, CanonicalForm};
pub use double::{complex_double, ComplexDouble};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reflection {
    Tau,
    Lambda,
    Rho,
}

impl Reflection {
    /// Fixed generator order used for canonical forms and tables.
    pub const ALL: [Reflection; 3] = [Reflection::Tau, Reflection::Lambda, Reflection::Rho];

    pub fn name(self) -> &'static str {
        match self {
            Reflection::Tau => "tau",
            Reflection::Lambda => "lambda",
            Reflection::Rho => "rho",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BladeSystem {
    tau: Permutation,
    lambda: Permutation,
    rho: Permutation,
    signature: TriangleSignature,
}

/// Checks every blade-system invariant and returns the validated value.
pub fn validate(
    tau: Permutation,
    lambda: Permutation,
    rho: Permutation,
    signature: TriangleSignature,
) -> Result<BladeSystem> {
    let n = tau.degree();
    for g in [&lambda, &rho] {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: g.degree(),
            });
        }
    }
    for (g, r) in [
        (&tau, Reflection::Tau),
        (&lambda, Reflection::Lambda),
        (&rho, Reflection::Rho),
    ] {
        if !g.is_involution() {
            return Err(Error::NotInvolution {
                name: r.name().into(),
            });
        }
    }
    let part = orbits(&[&tau, &lambda, &rho], n)?;
    if part.len() != 1 {
        return Err(Error::NotTransitive { orbits: part.len() });
    }
    let b = BladeSystem {
        tau,
        lambda,
        rho,
        signature,
    };
    for (name, prod, period) in b.constrained_products() {
        if let Period::Finite(bound) = period {
            if !prod.order_divides(u64::from(bound)) {
                return Err(Error::SignatureViolation {
                    product: name.into(),
                    order: element_order(&prod),
                    bound,
                });
            }
        }
    }
    Ok(b)
}

impl BladeSystem {
    pub fn new(
        tau: Permutation,
        lambda: Permutation,
        rho: Permutation,
        signature: TriangleSignature,
    ) -> Result<Self> {
        validate(tau, lambda, rho, signature)
    }

    /// Builds from 1-based cycle lists (fixed points may be omitted).
    pub fn from_cycles<C: AsRef<[usize]>>(
        n: usize,
        tau: &[C],
        lambda: &[C],
        rho: &[C],
        signature: TriangleSignature,
    ) -> Result<Self> {
        validate(
            Permutation::from_cycles(n, tau)?,
            Permutation::from_cycles(n, lambda)?,
            Permutation::from_cycles(n, rho)?,
            signature,
        )
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(
        tau: Permutation,
        lambda: Permutation,
        rho: Permutation,
        signature: TriangleSignature,
    ) -> Self {
        BladeSystem {
            tau,
            lambda,
            rho,
            signature,
        }
    }

    pub fn len(&self) -> usize {
        self.tau.degree()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn lambda(&self) -> &Permutation {
        &self.lambda
    }

    pub fn rho(&self) -> &Permutation {
        &self.rho
    }

    pub fn generator(&self, r: Reflection) -> &Permutation {
        match r {
            Reflection::Tau => &self.tau,
            Reflection::Lambda => &self.lambda,
            Reflection::Rho => &self.rho,
        }
    }

    pub fn generators(&self) -> [&Permutation; 3] {
        [&self.tau, &self.lambda, &self.rho]
    }

    pub fn signature(&self) -> TriangleSignature {
        self.signature
    }

    /// Same permutations under another signature, revalidated.
    pub fn with_signature(&self, signature: TriangleSignature) -> Result<Self> {
        validate(
            self.tau.clone(),
            self.lambda.clone(),
            self.rho.clone(),
            signature,
        )
    }

    /// The action of `r0, r1, r∞` through the epimorphism onto `⟨τ, λ, ρ⟩`.
    pub fn reflection_action(&self) -> ReflectionAction {
        ReflectionAction {
            r0: self.rho.clone(),
            r1: self.lambda.clone(),
            rinf: self.tau.clone(),
        }
    }

    /// Relabels blades by `g`: blade `b` becomes `g(b)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        Ok(BladeSystem {
            tau: self.tau.conjugate_by(g)?,
            lambda: self.lambda.conjugate_by(g)?,
            rho: self.rho.conjugate_by(g)?,
            signature: self.signature,
        })
    }

    pub fn tau_lambda(&self) -> Permutation {
        self.tau.compose_unchecked(&self.lambda)
    }

    pub fn tau_rho(&self) -> Permutation {
        self.tau.compose_unchecked(&self.rho)
    }

    pub fn rho_lambda(&self) -> Permutation {
        self.rho.compose_unchecked(&self.lambda)
    }

    fn constrained_products(&self) -> [(&'static str, Permutation, Period); 3] {
        [
            ("tau*lambda", self.tau_lambda(), self.signature.l0),
            ("tau*rho", self.tau_rho(), self.signature.l1),
            ("rho*lambda", self.rho_lambda(), self.signature.linf),
        ]
    }

    /// True when `(τλ)² = 1`, i.e. the system describes a map rather than a hypermap.
    pub fn is_map(&self) -> bool {
        self.tau_lambda().order_divides(2)
    }

    pub fn has_fixed_blades(&self) -> bool {
        self.generators()
            .iter()
            .any(|g| g.images().enumerate().any(|(i, j)| i == j))
    }

    pub fn map_type(&self) -> (u64, u64) {
        map_type(self)
    }

    pub fn cells(&self) -> Cells {
        cells(self)
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        euler_characteristic(self)
    }

    pub fn is_orientable(&self) -> bool {
        orientability(self)
    }

    pub fn boundary(&self) -> BoundaryReport {
        boundary(self)
    }

    pub fn classify(&self) -> Result<SurfaceType> {
        classify(self)
    }

    pub fn passport(&self) -> Passport {
        passport(self)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }

    pub fn complex_double(&self) -> ComplexDouble {
        complex_double(self)
    }

    /// 2-colouring of the blade graph when it is bipartite, blade 0 coloured `false`.
    pub fn orientation_colouring(&self) -> Option<Vec<bool>> {
        let n = self.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            stack.push(start);
            while let Some(b) = stack.pop() {
                let c = colour[b].expect("coloured before push");
                for g in self.generators() {
                    let nb = g.apply(b);
                    if nb == b {
                        continue;
                    }
                    match colour[nb] {
                        None => {
                            colour[nb] = Some(!c);
                            stack.push(nb);
                        }
                        Some(d) if d == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(
            colour
                .into_iter()
                .map(|c| c.expect("all coloured"))
                .collect(),
        )
    }
}

/// Vertex, edge and face orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cells {
    pub vertices: OrbitPartition,
    pub edges: OrbitPartition,
    pub faces: OrbitPartition,
}

/// `(m, n)`: orders of `τρ` and `ρλ`.
pub fn map_type(b: &BladeSystem) -> (u64, u64) {
    (element_order(&b.tau_rho()), element_order(&b.rho_lambda()))
}

pub fn cells(b: &BladeSystem) -> Cells {
    let n = b.len();
    let orbit = |g: &Permutation, h: &Permutation| orbits(&[g, h], n).expect("equal degrees");
    Cells {
        vertices: orbit(&b.tau, &b.rho),
        edges: orbit(&b.tau, &b.lambda),
        faces: orbit(&b.rho, &b.lambda),
    }
}

/// `χ = (c(τλ) + c(λρ) + c(ρτ) − N) / 2`, with fixed points counted as cycles.
pub fn euler_characteristic(b: &BladeSystem) -> Result<i64> {
    let lambda_rho = b.lambda.compose_unchecked(&b.rho);
    let rho_tau = b.rho.compose_unchecked(&b.tau);
    let numerator =
        (cycle_count(&b.tau_lambda()) + cycle_count(&lambda_rho) + cycle_count(&rho_tau)) as i64
            - b.len() as i64;
    if numerator % 2 != 0 {
        return Err(Error::InternalParity { numerator });
    }
    Ok(numerator / 2)
}

/// True iff the blade graph (an edge `b — g(b)` for every non-fixed `g(b)`) is bipartite.
pub fn orientability(b: &BladeSystem) -> bool {
    b.orientation_colouring().is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    pub euler: i64,
    pub orientable: bool,
    pub boundary: usize,
    /// Genus when orientable, crosscap number otherwise.
    pub genus_or_crosscaps: usize,
}

impl SurfaceType {
    /// Assembles the type from its invariants, checking the classification identity.
    pub fn from_invariants(euler: i64, orientable: bool, boundary: usize) -> Result<Self> {
        if euler > 2 {
            return Err(Error::InternalClassification(format!(
                "euler characteristic {euler} > 2"
            )));
        }
        let deficit = 2 - euler - boundary as i64;
        let genus_or_crosscaps = if orientable {
            if deficit < 0 || deficit % 2 != 0 {
                return Err(Error::InternalClassification(format!(
                    "orientable surface with chi = {euler}, b = {boundary} has no integral genus"
                )));
            }
            deficit / 2
        } else {
            if deficit < 1 {
                return Err(Error::InternalClassification(format!(
                    "non-orientable surface with chi = {euler}, b = {boundary} has no crosscaps"
                )));
            }
            deficit
        };
        Ok(SurfaceType {
            euler,
            orientable,
            boundary,
            genus_or_crosscaps: genus_or_crosscaps as usize,
        })
    }

    /// Short human-readable name, e.g. `disc`, `Möbius band`, `genus 2, 1 boundary`.
    pub fn name(&self) -> String {
        let base = match (self.orientable, self.genus_or_crosscaps, self.boundary) {
            (true, 0, 0) => return "sphere".into(),
            (true, 0, 1) => return "disc".into(),
            (true, 0, 2) => return "annulus".into(),
            (true, 1, 0) => return "torus".into(),
            (false, 1, 0) => return "projective plane".into(),
            (false, 1, 1) => return "Möbius band".into(),
            (false, 2, 0) => return "Klein bottle".into(),
            (true, g, _) => format!("orientable genus {g}"),
            (false, k, _) => format!("{k} crosscaps"),
        };
        if self.boundary == 0 {
            base
        } else {
            format!("{base}, {} boundary", self.boundary)
        }
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chi={} {} b={} {}={}",
            self.euler,
            if self.orientable {
                "orientable"
            } else {
                "non-orientable"
            },
            self.boundary,
            if self.orientable { "g" } else { "k" },
            self.genus_or_crosscaps
        )
    }
}

pub fn classify(b: &BladeSystem) -> Result<SurfaceType> {
    let euler = euler_characteristic(b)?;
    SurfaceType::from_invariants(euler, orientability(b), boundary(b).components.len())
}

/// Cycle types (non-increasing) of `τρ`, `τλ`, `ρλ`: the ramification over `0`, `1`, `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passport {
    pub over0: Vec<usize>,
    pub over1: Vec<usize>,
    pub overinf: Vec<usize>,
}

pub fn passport(b: &BladeSystem) -> Passport {
    Passport {
        over0: b.tau_rho().cycle_type(),
        over1: b.tau_lambda().cycle_type(),
        overinf: b.rho_lambda().cycle_type(),
    }
}
