#![allow(dead_code)]

use rand::Rng;
use tvacc_core::{Graph, RootedTree, VertexFn};

/// Subgraph of `t` induced by `V_u`, relabelled `0..|V_u|` with `u -> 0`,
/// plus the original vertex of each new label.
pub fn subtree(t: &RootedTree, u: usize) -> (Graph, Vec<usize>) {
    let mut verts = vec![u];
    let mut i = 0;
    while i < verts.len() {
        let v = verts[i];
        verts.extend_from_slice(t.children(v));
        i += 1;
    }
    let mut label = vec![usize::MAX; t.n()];
    for (new, &old) in verts.iter().enumerate() {
        label[old] = new;
    }
    let edges: Vec<_> = verts[1..].iter().map(|&v| (label[t.parent(v).unwrap()], label[v])).collect();
    (Graph::new(verts.len(), &edges).unwrap(), verts)
}

pub fn restrict(f: &VertexFn, verts: &[usize]) -> VertexFn {
    VertexFn::new(verts.iter().map(|&v| f[v]).collect())
}

pub fn random_fn<R: Rng>(n: usize, lo: i64, hi: i64, rng: &mut R) -> VertexFn {
    VertexFn::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// All labelled trees on `n` vertices, via every Prüfer sequence.
pub fn all_labelled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![tvacc_core::gen::path(n)];
    }
    let total = n.pow(n as u32 - 2);
    (0..total)
        .map(|mut code_index| {
            let code: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let c = code_index % n;
                    code_index /= n;
                    c
                })
                .collect();
            decode_pruefer(n, &code)
        })
        .collect()
}

fn decode_pruefer(n: usize, code: &[usize]) -> Graph {
    let mut degree = vec![1; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}
