use super::{BladeSystem, Reflection};

/// A blade together with a generator that fixes it: one boundary segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedPair {
    pub blade: usize,
    pub generator: Reflection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    /// Sorted by blade, then generator.
    pub fixed_pairs: Vec<FixedPair>,
    /// The two neighbours of each fixed pair, as indices into `fixed_pairs`.
    pub links: Vec<[usize; 2]>,
    /// Boundary circles, each a cyclic walk through the link graph.
    pub components: Vec<Vec<FixedPair>>,
}

impl BoundaryReport {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

/// From a pair `(b, g)`, walks the `⟨g, h⟩` chain applying `h, g, h, …` and
/// stops at the first blade fixed by the generator due next.
fn walk(b: &BladeSystem, start: usize, g: Reflection, h: Reflection) -> FixedPair {
    let mut blade = start;
    let mut next = h;
    loop {
        let p = b.generator(next);
        let image = p.apply(blade);
        if image == blade {
            return FixedPair {
                blade,
                generator: next,
            };
        }
        blade = image;
        next = if next == h { g } else { h };
    }
}

pub fn boundary(b: &BladeSystem) -> BoundaryReport {
    let mut fixed_pairs = Vec::new();
    for blade in 0..b.len() {
        for g in Reflection::ALL {
            if b.generator(g).apply(blade) == blade {
                fixed_pairs.push(FixedPair {
                    blade,
                    generator: g,
                });
            }
        }
    }
    let index = |p: FixedPair| {
        fixed_pairs
            .binary_search(&p)
            .expect("walk ends at a fixed pair")
    };
    let links: Vec<[usize; 2]> = fixed_pairs
        .iter()
        .map(|fp| {
            let mut others = Reflection::ALL.into_iter().filter(|&h| h != fp.generator);
            let h1 = others.next().expect("three generators");
            let h2 = others.next().expect("three generators");
            [
                index(walk(b, fp.blade, fp.generator, h1)),
                index(walk(b, fp.blade, fp.generator, h2)),
            ]
        })
        .collect();

    let mut visited = vec![false; fixed_pairs.len()];
    let mut components = Vec::new();
    for start in 0..fixed_pairs.len() {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut cycle = vec![fixed_pairs[start]];
        let mut prev = start;
        let mut cur = links[start][0];
        while cur != start {
            visited[cur] = true;
            cycle.push(fixed_pairs[cur]);
            let [a, c] = links[cur];
            let next = if a == prev { c } else { a };
            prev = cur;
            cur = next;
        }
        components.push(cycle);
    }
    BoundaryReport {
        fixed_pairs,
        links,
        components,
    }
}
