use num_rational::Ratio;
use num_traits::{One, Zero};

use super::gaussian::{Gaussian, Point};
use super::map::RationalMap;
use super::poly::Poly;
use super::scalar::ExactInt;
use crate::error::{Error, Result};

/// A set of at most three points of the sphere, closed under conjugation,
/// with at most one non-real pair. Stored sorted without repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CriticalSet<I: ExactInt> {
    values: Vec<Point<I>>,
}

impl<I: ExactInt> CriticalSet<I> {
    pub fn new(values: impl IntoIterator<Item = Point<I>>) -> Result<Self> {
        let mut values: Vec<Point<I>> = values.into_iter().collect();
        values.sort();
        values.dedup();
        if values.len() > 3 {
            return Err(Error::TooManyValues(values.len()));
        }
        if values
            .iter()
            .any(|v| values.binary_search(&v.conj()).is_err())
        {
            return Err(Error::NotConjugationClosed);
        }
        let pairs = values.iter().filter(|v| !v.is_real()).count() / 2;
        if pairs > 1 {
            return Err(Error::TooManyNonRealPairs { pairs });
        }
        Ok(CriticalSet { values })
    }

    pub fn values(&self) -> &[Point<I>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The member of the non-real pair with positive imaginary part.
    pub fn upper_value(&self) -> Option<&Gaussian<I>> {
        self.values.iter().find_map(|v| match v {
            Point::Finite(z) if z.im > Ratio::zero() => Some(z),
            _ => None,
        })
    }
}

/// Möbius map sending `v1, v2, v3` to `0, 1, ∞`.
pub fn moebius_to_standard<I: ExactInt>(
    v1: &Point<I>,
    v2: &Point<I>,
    v3: &Point<I>,
) -> Result<RationalMap<I>> {
    if v1 == v2 || v2 == v3 || v1 == v3 {
        return Err(Error::NotDistinct);
    }
    for v in [v1, v2, v3] {
        if !v.is_real() {
            return Err(Error::NotReal(v.to_string()));
        }
    }
    let zero = Ratio::zero;
    let one = Ratio::one;
    match (v1.as_real(), v2.as_real(), v3.as_real()) {
        (None, Some(b), Some(c)) => RationalMap::moebius(zero(), b - c, one(), -c.clone()),
        (Some(a), None, Some(c)) => RationalMap::moebius(one(), -a.clone(), one(), -c.clone()),
        (Some(a), Some(b), None) => RationalMap::moebius(one(), -a.clone(), zero(), b - a),
        (Some(a), Some(b), Some(c)) => {
            let k = b - c;
            let m = b - a;
            RationalMap::moebius(k.clone(), -(k * a.clone()), m.clone(), -(m * c.clone()))
        }
        _ => unreachable!("at most one point is infinite"),
    }
}

/// `X² + aX + b` with `a = −2 Re P`, `b = |P|²`: sends `P` and `P̄` to `0`,
/// fixes `∞`, and has the real critical value `(Im P)²`.
pub fn fold_quadratic<I: ExactInt>(p: &Gaussian<I>) -> Result<RationalMap<I>> {
    if p.is_real() {
        return Err(Error::RealInput(p.to_string()));
    }
    let a = -(p.re.clone() + p.re.clone());
    Ok(RationalMap::polynomial(Poly::new(vec![
        p.norm_sqr(),
        a,
        Ratio::one(),
    ])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Moebius,
    Fold,
}

impl StepKind {
    pub fn name(self) -> &'static str {
        match self {
            StepKind::Moebius => "moebius",
            StepKind::Fold => "fold",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step<I: ExactInt> {
    pub kind: StepKind,
    pub map: RationalMap<I>,
}

/// State of the composite before the last rescaling step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Snapshot<I: ExactInt> {
    pub map: RationalMap<I>,
    pub images: Vec<Point<I>>,
    pub own_critical_values: Vec<Point<I>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate<I: ExactInt> {
    pub inputs: Vec<Point<I>>,
    /// Points added to reach three; each lands in `{0, 1, ∞}` as well.
    pub padded: Vec<Point<I>>,
    /// Applied first to last.
    pub steps: Vec<Step<I>>,
    pub images: Vec<Point<I>>,
    pub own_critical_values: Vec<Point<I>>,
    pub before_final: Option<Snapshot<I>>,
}

impl<I: ExactInt> Certificate<I> {
    /// Recomputes everything the certificate claims about `h`.
    pub fn verify(&self, h: &RationalMap<I>) -> Result<bool> {
        let composite = self
            .steps
            .iter()
            .fold(RationalMap::identity(), |acc, s| s.map.compose(&acc));
        if composite != *h {
            return Ok(false);
        }
        let images: Vec<Point<I>> = self.inputs.iter().map(|v| h.eval(v)).collect();
        let own = h.critical_values()?;
        Ok(images == self.images
            && own == self.own_critical_values
            && images.iter().all(Point::is_standard)
            && own.iter().all(Point::is_standard)
            && self.padded.iter().all(|v| h.eval(v).is_standard()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Normalization<I: ExactInt> {
    pub map: RationalMap<I>,
    pub certificate: Certificate<I>,
}

/// A rational map `h` of degree at most two with real coefficients sending
/// every value of `set`, and every critical value of `h` itself, into
/// `{0, 1, ∞}`.
pub fn normalize<I: ExactInt>(set: &CriticalSet<I>) -> Result<Normalization<I>> {
    let standard = [Point::zero(), Point::one(), Point::Infinity];
    let mut padded = Vec::new();
    let mut steps = Vec::new();
    let mut before_final = None;

    match set.upper_value() {
        None => {
            let mut slots: [Option<Point<I>>; 3] = [None, None, None];
            let mut rest = Vec::new();
            for v in set.values() {
                match standard.iter().position(|s| s == v) {
                    Some(k) => slots[k] = Some(v.clone()),
                    None => rest.push(v.clone()),
                }
            }
            let mut rest = rest.into_iter();
            for (k, slot) in slots.iter_mut().enumerate() {
                if slot.is_none() {
                    *slot = rest.next();
                }
                if slot.is_none() {
                    padded.push(standard[k].clone());
                    *slot = Some(standard[k].clone());
                }
            }
            let [a, b, c] = slots.map(|s| s.expect("filled"));
            steps.push(Step {
                kind: StepKind::Moebius,
                map: moebius_to_standard(&a, &b, &c)?,
            });
        }
        Some(p) => {
            let q = match set.values().iter().find(|v| v.is_real()) {
                Some(q) => q.clone(),
                None => {
                    padded.push(Point::zero());
                    Point::zero()
                }
            };
            let m1 = match q.as_real() {
                Some(q) => Some(RationalMap::new(Poly::one(), Poly::linear_root(q.clone()))?),
                None => None,
            };
            let p1 = match &m1 {
                Some(m) => match m.eval(&Point::Finite(p.clone())) {
                    Point::Finite(z) => z,
                    Point::Infinity => unreachable!("non-real point has a finite image"),
                },
                None => p.clone(),
            };
            if let Some(m) = m1 {
                steps.push(Step {
                    kind: StepKind::Moebius,
                    map: m,
                });
            }
            let fold = fold_quadratic(&p1)?;
            let c = p1.im.clone() * p1.im.clone();
            steps.push(Step {
                kind: StepKind::Fold,
                map: fold,
            });
            if !c.is_one() {
                let h1 = compose_steps(&steps);
                before_final = Some(Snapshot {
                    images: set.values().iter().map(|v| h1.eval(v)).collect(),
                    own_critical_values: h1.critical_values()?,
                    map: h1,
                });
                steps.push(Step {
                    kind: StepKind::Moebius,
                    map: moebius_to_standard(&Point::zero(), &Point::real(c), &Point::Infinity)?,
                });
            }
        }
    }

    let map = compose_steps(&steps);
    let inputs = set.values().to_vec();
    let certificate = Certificate {
        images: inputs.iter().map(|v| map.eval(v)).collect(),
        own_critical_values: map.critical_values()?,
        inputs,
        padded,
        steps,
        before_final,
    };
    Ok(Normalization { map, certificate })
}

/// `normalize` on a raw list of values.
pub fn normalize_values<I: ExactInt>(values: &[Point<I>]) -> Result<Normalization<I>> {
    normalize(&CriticalSet::new(values.iter().cloned())?)
}

fn compose_steps<I: ExactInt>(steps: &[Step<I>]) -> RationalMap<I> {
    steps
        .iter()
        .fold(RationalMap::identity(), |acc, s| s.map.compose(&acc))
}

/// `j = g2³ / (g2³ − 27 g3²)`.
pub fn j_invariant<I: ExactInt>(g2: &Ratio<I>, g3: &Ratio<I>) -> Result<Ratio<I>> {
    let cube = g2.clone() * g2.clone() * g2.clone();
    let k27 = Ratio::from_integer(super::poly::int_from_usize::<I>(27));
    let delta = cube.clone() - k27 * g3.clone() * g3.clone();
    if delta.is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(cube / delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Point<i64>;

    fn pt(s: &str) -> P {
        s.parse().unwrap()
    }

    fn pts(s: &[&str]) -> Vec<P> {
        s.iter().map(|v| pt(v)).collect()
    }

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn cross_ratio_cases() {
        let inf = Point::Infinity;
        for (a, b, c) in [
            (pt("2"), pt("3"), pt("4")),
            (inf.clone(), pt("3"), pt("-1")),
            (pt("1/2"), inf.clone(), pt("7")),
            (pt("-5"), pt("0"), inf.clone()),
        ] {
            let m = moebius_to_standard(&a, &b, &c).unwrap();
            assert_eq!(m.degree(), 1);
            assert_eq!(
                vec![m.eval(&a), m.eval(&b), m.eval(&c)],
                vec![pt("0"), pt("1"), inf.clone()]
            );
        }
        assert_eq!(
            moebius_to_standard(&pt("1"), &pt("1"), &pt("2")).unwrap_err(),
            Error::NotDistinct
        );
        assert!(matches!(
            moebius_to_standard(&pt("i"), &pt("1"), &pt("2")),
            Err(Error::NotReal(_))
        ));
    }

    #[test]
    fn fold_examples() {
        let r = fold_quadratic(&Gaussian::<i64>::i()).unwrap();
        assert_eq!(r.to_string(), "x^2 + 1");
        assert_eq!(r.eval(&pt("i")), pt("0"));
        assert_eq!(r.eval(&pt("-i")), pt("0"));
        assert_eq!(r.critical_values().unwrap(), pts(&["1", "inf"]));
        assert!(matches!(
            fold_quadratic(&Gaussian::real(q(3, 1))),
            Err(Error::RealInput(_))
        ));
        let z = Gaussian::new(q(1, 2), q(3, 1));
        let r = fold_quadratic(&z).unwrap();
        assert_eq!(r.critical_values().unwrap(), pts(&["9", "inf"]));
    }

    #[test]
    fn set_validation() {
        assert_eq!(
            CriticalSet::new(pts(&["0", "1", "2", "3"])).unwrap_err(),
            Error::TooManyValues(4)
        );
        assert_eq!(
            CriticalSet::new(pts(&["i", "1"])).unwrap_err(),
            Error::NotConjugationClosed
        );
        assert_eq!(
            CriticalSet::new(pts(&["i", "-i", "2i"])).unwrap_err(),
            Error::NotConjugationClosed
        );
        assert_eq!(CriticalSet::new(pts(&["1", "1", "2"])).unwrap().len(), 2);
    }

    #[test]
    fn i_minus_i_infinity() {
        let n = normalize_values(&pts(&["i", "-i", "inf"])).unwrap();
        assert_eq!(n.map.to_string(), "x^2 + 1");
        assert_eq!(n.certificate.images, pts(&["0", "0", "inf"]));
        assert_eq!(n.certificate.own_critical_values, pts(&["1", "inf"]));
        assert!(n.certificate.padded.is_empty());
        assert!(n.certificate.before_final.is_none());
        assert!(n.certificate.verify(&n.map).unwrap());
    }

    #[test]
    fn real_triples_use_the_cross_ratio() {
        let n = normalize_values(&pts(&["2", "3", "4"])).unwrap();
        assert_eq!(
            n.map,
            moebius_to_standard(&pt("2"), &pt("3"), &pt("4")).unwrap()
        );
        assert_eq!(n.certificate.images, pts(&["0", "1", "inf"]));
        assert!(n.certificate.own_critical_values.is_empty());
    }

    #[test]
    fn standard_values_stay_put() {
        let n = normalize_values(&pts(&["1", "5"])).unwrap();
        assert_eq!(n.map.eval(&pt("1")), pt("1"));
        assert_eq!(n.map.eval(&pt("5")), pt("0"));
        assert_eq!(n.certificate.padded, pts(&["inf"]));
        let n = normalize_values(&pts(&[])).unwrap();
        assert_eq!(n.map, RationalMap::identity());
        assert_eq!(n.certificate.padded, pts(&["0", "1", "inf"]));
    }

    #[test]
    fn pair_with_finite_real_value() {
        let n = normalize_values(&pts(&["1+2i", "1-2i", "3"])).unwrap();
        assert_eq!(n.map.degree(), 2);
        assert_eq!(n.certificate.images, pts(&["0", "0", "inf"]));
        let snap = n.certificate.before_final.as_ref().unwrap();
        assert_eq!(snap.images, pts(&["0", "0", "inf"]));
        assert_eq!(snap.own_critical_values.len(), 2);
        assert!(n.certificate.verify(&n.map).unwrap());
    }

    #[test]
    fn pair_alone_is_padded() {
        let n = normalize_values(&pts(&["2i", "-2i"])).unwrap();
        assert_eq!(n.certificate.padded, pts(&["0"]));
        assert_eq!(n.map.eval(&pt("0")), Point::Infinity);
        assert!(n.certificate.verify(&n.map).unwrap());
    }

    #[test]
    fn certificate_rejects_other_maps() {
        let n = normalize_values(&pts(&["2", "3", "4"])).unwrap();
        assert!(!n.certificate.verify(&RationalMap::identity()).unwrap());
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_invariant(&q(54, 1), &q(54, 1)).unwrap(), q(2, 1));
        assert_eq!(j_invariant(&q(1, 1), &q(0, 1)).unwrap(), q(1, 1));
        assert_eq!(j_invariant(&q(0, 1), &q(1, 1)).unwrap(), q(0, 1));
        assert_eq!(
            j_invariant(&q(3, 1), &q(1, 1)).unwrap_err(),
            Error::SingularCurve
        );
    }

    fn value() -> impl Strategy<Value = P> {
        prop_oneof![
            (-30i64..30, 1i64..8).prop_map(|(n, d)| Point::real(q(n, d))),
            Just(Point::Infinity),
        ]
    }

    proptest! {
        #[test]
        fn real_sets_normalize(vals in prop::collection::vec(value(), 0..4)) {
            let n = normalize_values(&vals).unwrap();
            prop_assert!(n.certificate.verify(&n.map).unwrap());
            prop_assert_eq!(n.map.degree(), 1);
        }

        #[test]
        fn pairs_normalize(
            re in (-20i64..20, 1i64..6),
            im in (1i64..20, 1i64..6),
            real in prop::option::of(value()),
        ) {
            let big = |(n, d): (i64, i64)| Ratio::new(BigInt::from(n), BigInt::from(d));
            let z = Gaussian::new(big(re), big(im));
            let mut vals = vec![Point::Finite(z.clone()), Point::Finite(z.conj())];
            vals.extend(real.map(|v| match v {
                Point::Finite(x) => Point::real(big((*x.re.numer(), *x.re.denom()))),
                Point::Infinity => Point::Infinity,
            }));
            let n = normalize_values(&vals).unwrap();
            prop_assert!(n.certificate.verify(&n.map).unwrap());
            prop_assert_eq!(n.map.degree(), 2);
            prop_assert!(n.certificate.own_critical_values.iter().all(Point::is_standard));
        }
    }
}
