use crate::certify::{Star, StarPack};
use crate::flow::FlowNetwork;
use crate::graph::{Graph, Vertex};
use crate::Result;

/// Repeatedly takes the smallest remaining edge `xy` and deletes `x` and
/// `y`. Each step removes at most `2Δ - 1` edges, so the matching has at
/// least `e / (2Δ)` edges. Star centers are the smaller endpoints.
pub fn matching_lower_bound(g: &Graph) -> Result<StarPack> {
    if g.edge_count() == 0 {
        return crate::error::precondition("the graph has no edges");
    }
    let mut alive = vec![true; g.n()];
    let mut stars = Vec::new();
    for (u, v) in g.edges() {
        if alive[u] && alive[v] {
            alive[u] = false;
            alive[v] = false;
            stars.push(Star { center: u, tips: vec![v] });
        }
    }
    Ok(StarPack { arity: 1, stars })
}

/// Vertex-disjoint stars `K_{1,arity}`, one centered at each vertex of
/// `centers`, with all tips in `tips_from`. Decided exactly by max-flow;
/// `None` means no such pack exists.
pub fn star_pack(g: &Graph, centers: &[Vertex], tips_from: &[Vertex], arity: usize) -> Result<Option<StarPack>> {
    let n = g.n();
    if arity == 0 {
        return crate::error::precondition("arity must be positive");
    }
    let mut role = vec![0u8; n];
    for (set, mark) in [(centers, 1u8), (tips_from, 2u8)] {
        for &v in set {
            if v >= n {
                return crate::error::precondition(format!("vertex {v} out of range"));
            }
            if role[v] != 0 {
                return crate::error::precondition(format!("vertex {v} is listed twice or on both sides"));
            }
            role[v] = mark;
        }
    }
    let (c, t) = (centers.len(), tips_from.len());
    let (source, sink) = (c + t, c + t + 1);
    let mut net = FlowNetwork::new(c + t + 2);
    let mut tip_index = vec![usize::MAX; n];
    for (j, &v) in tips_from.iter().enumerate() {
        tip_index[v] = j;
        net.add_arc(c + j, sink, 1);
    }
    let mut arcs = Vec::new();
    for (i, &x) in centers.iter().enumerate() {
        net.add_arc(source, i, arity);
        let mut nbrs: Vec<Vertex> = g.neighbors(x).iter().copied().filter(|&w| role[w] == 2).collect();
        nbrs.sort_unstable();
        for w in nbrs {
            arcs.push((i, w, net.add_arc(i, c + tip_index[w], 1)));
        }
    }
    let need = arity * c;
    if net.max_flow(source, sink, need) < need {
        return Ok(None);
    }
    let mut stars: Vec<Star> = centers.iter().map(|&x| Star { center: x, tips: Vec::new() }).collect();
    for (i, w, id) in arcs {
        if net.flow_on(id) > 0 {
            stars[i].tips.push(w);
        }
    }
    Ok(Some(StarPack { arity, stars }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::verify_star_pack;

    #[test]
    fn matching_examples() {
        let m = matching_lower_bound(&Graph::star(5)).unwrap();
        assert_eq!(m.len(), 1);
        let pm = Graph::from_fn(10, |u, v| u % 2 == 0 && v == u + 1);
        let m = matching_lower_bound(&pm).unwrap();
        assert_eq!(m.len(), 5);
        assert!(verify_star_pack(&pm, &m, &m.centers()));
        assert!(matching_lower_bound(&Graph::edgeless(3)).is_err());
    }

    #[test]
    fn star_pack_examples() {
        let g = Graph::complete_bipartite(3, 9);
        let a: Vec<Vertex> = (0..3).collect();
        let b: Vec<Vertex> = (3..12).collect();
        let p = star_pack(&g, &a, &b, 3).unwrap().unwrap();
        assert!(verify_star_pack(&g, &p, &a));

        // vertex 1 has a single neighbor in the tip set
        let g = Graph::from_edges(6, [(0, 2), (0, 3), (1, 4), (0, 5)]).unwrap();
        assert_eq!(star_pack(&g, &[0, 1], &[2, 3, 4, 5], 2).unwrap(), None);
        assert!(star_pack(&g, &[0, 1], &[1, 2], 1).is_err());
    }

    #[test]
    fn sufficient_condition_boundary() {
        // every center sees exactly 3|I| = 6 tips
        let g = Graph::complete_bipartite(2, 6);
        let p = star_pack(&g, &[0, 1], &(2..8).collect::<Vec<_>>(), 3).unwrap().unwrap();
        assert!(verify_star_pack(&g, &p, &[0, 1]));
    }
}
