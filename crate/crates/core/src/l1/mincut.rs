use crate::cut::{cut, Cut};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub size: usize,
    pub witness: VertexSet,
}

/// Global minimum edge cut by Stoer-Wagner contraction, `O(n^3)`.
pub fn min_cut(g: &Graph) -> Result<MinCut> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    g.require_connected()?;

    let mut weight = vec![vec![0u64; n]; n];
    for &(u, v) in g.edges() {
        weight[u][v] = 1;
        weight[v][u] = 1;
    }
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(u64, Vec<usize>)> = None;

    while active.len() > 1 {
        // maximum adjacency order; ties go to the lowest super-vertex
        let mut in_order = vec![false; n];
        let mut key = vec![0u64; n];
        let mut prev = active[0];
        let mut last = active[0];
        let mut last_key = 0;
        for step in 0..active.len() {
            let v = *active
                .iter()
                .filter(|&&u| !in_order[u])
                .max_by(|&&a, &&b| key[a].cmp(&key[b]).then(b.cmp(&a)))
                .expect("an unvisited vertex remains");
            in_order[v] = true;
            if step > 0 {
                prev = last;
            }
            last = v;
            last_key = key[v];
            for &u in &active {
                if !in_order[u] {
                    key[u] += weight[v][u];
                }
            }
        }

        if best.as_ref().is_none_or(|(w, _)| last_key < *w) {
            best = Some((last_key, members[last].clone()));
        }

        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &u in &active {
            let w = weight[last][u];
            weight[prev][u] += w;
            weight[u][prev] += w;
        }
        weight[prev][prev] = 0;
        active.retain(|&u| u != last);
    }

    let (size, witness) = best.expect("n >= 2 runs at least one phase");
    Ok(MinCut {
        size: size as usize,
        witness: VertexSet::from_vertices(n, witness),
    })
}

/// `(n/2) ρ(S)` at the minimum-cut witness `S`, an upper bound on `b(G)`
/// computable in polynomial time.
pub fn heuristic_b_upper(g: &Graph) -> Result<(Rational, Cut)> {
    let mc = min_cut(g)?;
    let c = cut(g, &mc.witness)?;
    Ok((c.half_n_density(), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, random_connected, random_tree, FamilySpec};
    use crate::l1::b_exact;
    use crate::rational::ratio;
    use crate::vertex_set::low_bits;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_force_min_cut(g: &Graph) -> usize {
        (1..low_bits(g.n()))
            .map(|m| g.boundary_size(&VertexSet::from_mask(g.n(), m)))
            .min()
            .unwrap()
    }

    #[test]
    fn trees_have_unit_min_cut() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..20 {
            let t = random_tree(n, &mut rng);
            let mc = min_cut(&t).unwrap();
            assert_eq!(mc.size, 1);
            assert_eq!(t.boundary_size(&mc.witness), 1);
        }
    }

    #[test]
    fn family_values() {
        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        assert_eq!(min_cut(&c6).unwrap().size, 2);
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!(brute_force_min_cut(&k4), 3);
        assert_eq!(min_cut(&k4).unwrap().size, 3);
        assert_eq!(
            min_cut(&Graph::new(3, [(0, 1)]).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn matches_brute_force() {
        for seed in 0..200 {
            let n = 2 + (seed as usize % 10);
            let g = random_connected(n, 0.35, seed).unwrap();
            let mc = min_cut(&g).unwrap();
            assert_eq!(mc.size, brute_force_min_cut(&g), "seed {seed}");
            assert_eq!(g.boundary_size(&mc.witness), mc.size);
            assert!(!mc.witness.is_empty() && mc.witness.len() < n);
        }
    }

    #[test]
    fn heuristic_examples() {
        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!(heuristic_b_upper(&k4).unwrap().0, ratio(2, 1));

        // any min cut of a star is a pendant edge
        let s5 = generate(&FamilySpec::Star { n: 5 }).unwrap();
        assert_eq!(heuristic_b_upper(&s5).unwrap().0, ratio(5, 8));

        let p6 = generate(&FamilySpec::Path { n: 6 }).unwrap();
        let (bound, witness) = heuristic_b_upper(&p6).unwrap();
        assert!(bound >= b_exact(&p6, 26).unwrap().b);
        assert_eq!(witness.boundary_size, 1);
    }

    #[test]
    fn heuristic_is_an_upper_bound() {
        for seed in 0..100 {
            let g = random_connected(3 + seed as usize % 9, 0.3, seed).unwrap();
            let (bound, _) = heuristic_b_upper(&g).unwrap();
            assert!(bound >= b_exact(&g, 26).unwrap().b);
        }
    }
}
