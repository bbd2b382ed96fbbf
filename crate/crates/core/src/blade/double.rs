use super::BladeSystem;
use crate::perm::{orbits, Permutation};

/// The complex double: blades `B × {+, −}` with every generator lifted to
/// `ĝ(b, s) = (g(b), −s)`, split into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexDouble {
    pub components: Vec<BladeSystem>,
    /// `lift[b] = [(component, blade) of (b, +), (component, blade) of (b, −)]`.
    /// The deck involution swaps the two entries.
    pub lift: Vec<[(usize, usize); 2]>,
}

impl ComplexDouble {
    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    /// Image of `(component, blade)` under the antiholomorphic deck involution.
    pub fn deck(&self, component: usize, blade: usize) -> Option<(usize, usize)> {
        self.lift.iter().find_map(|[plus, minus]| {
            if *plus == (component, blade) {
                Some(*minus)
            } else if *minus == (component, blade) {
                Some(*plus)
            } else {
                None
            }
        })
    }
}

pub fn complex_double(b: &BladeSystem) -> ComplexDouble {
    let n = b.len();
    // (b, +) ↦ 2b, (b, −) ↦ 2b + 1.
    let lifted: Vec<Permutation> = b
        .generators()
        .iter()
        .map(|g| {
            let images = (0..2 * n)
                .map(|i| 2 * g.apply(i / 2) + (1 - i % 2))
                .collect();
            Permutation::from_images(images).expect("lift of a permutation")
        })
        .collect();
    let part = orbits(&[&lifted[0], &lifted[1], &lifted[2]], 2 * n).expect("equal degrees");

    let mut location = vec![(0usize, 0usize); 2 * n];
    let mut components = Vec::with_capacity(part.len());
    for (c, block) in part.blocks().iter().enumerate() {
        for (k, &i) in block.iter().enumerate() {
            location[i] = (c, k);
        }
        let restrict = |g: &Permutation| {
            let images = block.iter().map(|&i| location[g.apply(i)].1).collect();
            Permutation::from_images(images).expect("blocks are invariant")
        };
        components.push(BladeSystem::from_parts_unchecked(
            restrict(&lifted[0]),
            restrict(&lifted[1]),
            restrict(&lifted[2]),
            b.signature(),
        ));
    }
    let lift = (0..n)
        .map(|i| [location[2 * i], location[2 * i + 1]])
        .collect();
    ComplexDouble { components, lift }
}
