use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, Rational};
use crate::vertex_set::VertexSet;

/// The cut `δ(S)` of a nonempty proper vertex set together with its exact
/// relative sizes and edge density.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub set: VertexSet,
    pub boundary_size: usize,
    /// `|δ(S)| / |S|`
    pub xi_set: Rational,
    /// `|δ(S)| / |V \ S|`
    pub xi_complement: Rational,
    /// `|δ(S)| / (|S| |V \ S|)`
    pub density: Rational,
}

impl Cut {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn complement_size(&self) -> usize {
        self.set.universe() - self.set.len()
    }

    /// `(n/2) ρ(S)`: the l1 smoothing objective of the two-valued vector built
    /// from this cut.
    pub fn half_n_density(&self) -> Rational {
        ratio(self.set.universe() as i64, 2) * self.density
    }
}

pub fn cut(g: &Graph, s: &VertexSet) -> Result<Cut> {
    g.check_set(s)?;
    let size = s.len();
    if size == 0 || size == g.n() {
        return Err(Error::TrivialVertexSet);
    }
    Ok(cut_from_parts(g.n(), s.clone(), g.boundary_size(s)))
}

pub(crate) fn cut_from_parts(n: usize, set: VertexSet, boundary_size: usize) -> Cut {
    let s = set.len() as i64;
    let t = n as i64 - s;
    let d = boundary_size as i64;
    Cut {
        set,
        boundary_size,
        xi_set: ratio(d, s),
        xi_complement: ratio(d, t),
        density: ratio(d, s * t),
    }
}

/// `|δ(S)|` for a bitmask set, using neighbourhood masks.
pub(crate) fn mask_boundary(adj: &[u64], set: u64) -> u32 {
    crate::vertex_set::bits(set)
        .map(|v| (adj[v] & !set).count_ones())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, random_connected, FamilySpec};
    use crate::vertex_set::low_bits;
    use proptest::prelude::*;

    #[test]
    fn path5_first_two() {
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        let c = cut(&p5, &VertexSet::from_vertices(5, [0, 1])).unwrap();
        assert_eq!(c.boundary_size, 1);
        assert_eq!(c.density, ratio(1, 6));
        assert_eq!(c.xi_set, ratio(1, 2));
        assert_eq!(c.xi_complement, ratio(1, 3));
    }

    #[test]
    fn complete_density_is_one() {
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        for s in [vec![0, 1], vec![1, 3], vec![2], vec![0, 1, 3]] {
            let c = cut(&k4, &VertexSet::from_vertices(4, s)).unwrap();
            assert_eq!(c.density, ratio(1, 1));
        }
    }

    #[test]
    fn trivial_sets_rejected() {
        let p3 = generate(&FamilySpec::Path { n: 3 }).unwrap();
        assert_eq!(cut(&p3, &VertexSet::empty(3)), Err(Error::TrivialVertexSet));
        assert_eq!(cut(&p3, &VertexSet::full(3)), Err(Error::TrivialVertexSet));
        assert!(matches!(
            cut(&p3, &VertexSet::full(4)),
            Err(Error::VertexSetMismatch { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        // xi(S) + xi(V\S) = n rho(S), and |δ(S)| = |δ(V\S)|, over every subset
        #[test]
        fn xi_rho_identity_all_subsets(n in 2usize..=12, p in 0.1f64..0.9, seed in any::<u64>()) {
            let g = random_connected(n, p, seed).unwrap();
            let masks = g.masks().unwrap();
            for mask in 1..low_bits(n) {
                let s = VertexSet::from_mask(n, mask);
                let c = cut(&g, &s).unwrap();
                prop_assert_eq!(c.xi_set + c.xi_complement, ratio(n as i64, 1) * c.density);
                let comp = cut(&g, &s.complement()).unwrap();
                prop_assert_eq!(comp.boundary_size, c.boundary_size);
                prop_assert_eq!(mask_boundary(masks, mask) as usize, c.boundary_size);
            }
        }
    }
}
