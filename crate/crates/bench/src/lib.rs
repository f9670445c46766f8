//! Deterministic workloads shared by the benchmarks.

use sr_locus::{MonomialIdeal, Ring, VarSet};

fn edge_ideal(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> MonomialIdeal {
    let ring = Ring::indexed(n).expect("valid ring size");
    let sets = edges.into_iter().map(|(a, b)| VarSet::singleton(a).with(b));
    MonomialIdeal::from_sets(&ring, sets).expect("edges fit the ring")
}

/// Edge ideal of the `n`-cycle.
pub fn cycle(n: usize) -> MonomialIdeal {
    edge_ideal(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Edge ideal of the path on `n` vertices.
pub fn path(n: usize) -> MonomialIdeal {
    edge_ideal(n, (1..n).map(|i| (i - 1, i)))
}

/// Edge ideal of the complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> MonomialIdeal {
    edge_ideal(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// The six-vertex cone example `(x*w, y*w, x*a, y*a, z*b, w*b, a*b)`,
/// padded with `extra` unused variables.
pub fn cone_example(extra: usize) -> MonomialIdeal {
    let n = 6 + extra;
    edge_ideal(n, [(0, 3), (1, 3), (0, 4), (1, 4), (2, 5), (3, 5), (4, 5)])
}
