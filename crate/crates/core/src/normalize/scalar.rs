use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Integer types that back the exact rationals `Ratio<I>` used here.
///
/// Implemented for `BigInt` (the default, see [`crate::Rational`]) and for
/// the machine integers, which are convenient in tests but may overflow.
pub trait ExactInt:
    Integer + Signed + Roots + Clone + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}

impl<T> ExactInt for T where
    T: Integer + Signed + Roots + Clone + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}

/// Exact square root of a non-negative rational, if it is rational.
pub fn exact_sqrt<I: ExactInt>(q: &Ratio<I>) -> Option<Ratio<I>> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Ratio::zero());
    }
    let root = |v: &I| {
        let r = v.sqrt();
        (r.clone() * r.clone() == *v).then_some(r)
    };
    Some(Ratio::new(root(q.numer())?, root(q.denom())?))
}
