//! Exact budgeted partial immunization of trees.
//!
//! For a rooted tree `T`, thresholds `tau`, per-vertex increment caps
//! `iota_max` and a budget `b`, the table holds for every vertex `u` and every
//! budget `b' <= b` two values:
//!
//! * `x0(u, b')`: the largest `dyn(T_u, tau + iota)` over increments `iota`
//!   on the subtree `V_u` with `0 <= iota <= iota_max` and `iota(V_u) = b'`;
//! * `x1(u, b')`: the same with the threshold of `u` lowered by one, i.e. the
//!   parent of `u` is already infected.
//!
//! Leaves are settled directly. An internal vertex distributes its budget
//! between itself (`b_u`) and its children; a child `v` with budget `b_v` is
//! *tight* when `x0(v, b_v) = x1(v, b_v)`, meaning it gains nothing from being
//! infected before `u`. The vertex `u` has to be seeded (the `+1` term) exactly
//! when fewer than `tau(u) + b_u - j` children are tight. The best child
//! distribution for every count of tight children is a knapsack over the
//! children, [`MTable`]. The total work is `O(sum_u d(u)^2 (b + 1)^2)`, which
//! is `O(n^2 (b + 1)^2)` on trees.
//!
//! One increment per `(u, b')` witnesses both `x0` and `x1`, so a witness for
//! the whole tree is assembled top-down from the per-cell choices.

use crate::error::{Error, Result};
use crate::ext::ExtInt;
use crate::graph::{RootedTree, VertexFn};
use crate::par::{self, Exec};

/// How the budget of a cell was split: `own` on the vertex itself, the rest
/// over its children (in the order of [`RootedTree::children`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Choice {
    pub own: i64,
    pub child_budgets: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpCell {
    pub x0: ExtInt,
    pub x1: ExtInt,
    pub choice: Option<Choice>,
}

impl DpCell {
    pub fn infeasible() -> Self {
        DpCell { x0: ExtInt::NegInf, x1: ExtInt::NegInf, choice: None }
    }

    pub fn is_feasible(&self) -> bool {
        self.x0.is_finite()
    }

    /// `x0 = x1` on a feasible cell.
    pub fn is_tight(&self) -> bool {
        self.x0.is_finite() && self.x0 == self.x1
    }
}

/// Cell of a childless vertex: `x_j = 0` if `tau_u + b - j <= 0`, else `1`.
/// Budgets outside `0..=iota_max_u` give the infeasible cell.
pub fn leaf_cell(tau_u: i64, iota_max_u: i64, b: i64) -> DpCell {
    if b < 0 || b > iota_max_u {
        return DpCell::infeasible();
    }
    let x = |j: i64| ExtInt::Finite(i64::from(tau_u + b - j > 0));
    DpCell { x0: x(0), x1: x(1), choice: Some(Choice { own: b, child_budgets: Vec::new() }) }
}

/// What the parent needs to know about one child, per budget.
#[derive(Clone, Debug)]
pub struct ChildProfile {
    x1: Vec<ExtInt>,
    tight: Vec<bool>,
}

impl ChildProfile {
    pub fn from_cells(cells: &[DpCell]) -> Self {
        ChildProfile { x1: cells.iter().map(|c| c.x1).collect(), tight: cells.iter().map(DpCell::is_tight).collect() }
    }
}

/// Below this many inner-loop steps a level of the table is filled
/// sequentially.
const PAR_LEVEL_WORK: usize = 1 << 14;

/// `M(p, p_eq, s)`: the largest `sum_{i <= p} x1(v_i, b_i)` over budgets of
/// the first `p` children summing to `s`, with exactly `p_eq` of them tight.
///
/// The budget placed on the parent itself is not part of the table; the
/// four-argument view `M(p, p_eq, b', b_u)` is [`MTable::get`].
#[derive(Clone, Debug)]
pub struct MTable {
    budget: usize,
    children: Vec<ChildProfile>,
    // levels[p][p_eq * (budget + 1) + s]
    levels: Vec<Vec<ExtInt>>,
}

impl MTable {
    pub fn build(children: Vec<ChildProfile>, budget: usize) -> Self {
        Self::build_with(Exec::default(), children, budget)
    }

    pub fn build_with(exec: Exec, children: Vec<ChildProfile>, budget: usize) -> Self {
        let width = budget + 1;
        let mut base = vec![ExtInt::NegInf; width];
        base[0] = ExtInt::ZERO;
        let mut levels = vec![base];
        for (p, child) in children.iter().enumerate().map(|(i, c)| (i + 1, c)) {
            let prev = &levels[p - 1];
            let column = |s: usize| -> Vec<ExtInt> {
                let mut best = vec![ExtInt::NegInf; p + 1];
                for bc in 0..=s {
                    let x = match child.x1.get(bc) {
                        Some(&x @ ExtInt::Finite(_)) => x,
                        _ => continue,
                    };
                    let shift = usize::from(child.tight[bc]);
                    for (e, slot) in best.iter_mut().enumerate().skip(shift) {
                        let e_prev = e - shift;
                        if e_prev >= p {
                            break;
                        }
                        let cand = prev[e_prev * width + s - bc] + x;
                        if cand > *slot {
                            *slot = cand;
                        }
                    }
                }
                best
            };
            let exec = if (p + 1) * width * width >= PAR_LEVEL_WORK { exec } else { Exec::Sequential };
            let columns = par::map_indices(exec, width, column);
            let mut level = vec![ExtInt::NegInf; (p + 1) * width];
            for (s, col) in columns.into_iter().enumerate() {
                for (e, v) in col.into_iter().enumerate() {
                    level[e * width + s] = v;
                }
            }
            levels.push(level);
        }
        MTable { budget, children, levels }
    }

    pub fn children(&self) -> usize {
        self.children.len()
    }

    /// `M(p, p_eq, s)` with `s` the budget spent on the first `p` children.
    pub fn spent(&self, p: usize, p_eq: i64, s: i64) -> ExtInt {
        if p_eq < 0 || p_eq as usize > p || p > self.children.len() || s < 0 || s as usize > self.budget {
            return ExtInt::NegInf;
        }
        self.levels[p][p_eq as usize * (self.budget + 1) + s as usize]
    }

    /// `M(p, p_eq, b', b_u)`: the children share `b' - b_u`.
    pub fn get(&self, p: usize, p_eq: i64, b_prime: i64, b_u: i64) -> ExtInt {
        if b_u < 0 || b_prime < b_u {
            return ExtInt::NegInf;
        }
        self.spent(p, p_eq, b_prime - b_u)
    }

    /// A child budget assignment attaining `M(k, p_eq, s)`, in the order the
    /// children were supplied. Later children get the smallest budget first,
    /// so the result is the lexicographically least optimum read from the
    /// last child backwards.
    pub fn assignment(&self, p_eq: i64, s: i64) -> Option<Vec<i64>> {
        let k = self.children.len();
        let mut target = self.spent(k, p_eq, s);
        if !target.is_finite() {
            return None;
        }
        let (mut e, mut s) = (p_eq, s);
        let mut out = vec![0; k];
        for p in (1..=k).rev() {
            let child = &self.children[p - 1];
            let pick = (0..=s).find_map(|bc| {
                let x = *child.x1.get(bc as usize)?;
                let e_prev = e - i64::from(child.tight[bc as usize]);
                let rest = self.spent(p - 1, e_prev, s - bc);
                (x.is_finite() && rest + x == target).then_some((bc, e_prev, rest))
            });
            let (bc, e_prev, rest) = pick.expect("table entries are attained");
            out[p - 1] = bc;
            e = e_prev;
            s -= bc;
            target = rest;
        }
        Some(out)
    }
}

/// Free-function form of [`MTable::build`].
pub fn m_table(children: Vec<ChildProfile>, budget: usize) -> MTable {
    MTable::build(children, budget)
}

/// `m_j(b_u)`: best value when `u` keeps `b_u` and its children share `s`,
/// with `need = tau(u) + b_u - j` tight children sparing `u` from the seed.
fn seeded_max(table: &MTable, need: i64, s: i64) -> ExtInt {
    let k = table.children() as i64;
    let seeded = (0..need.min(k + 1)).map(|e| table.spent(table.children(), e, s) + 1).max();
    let spared = (need.max(0)..=k).map(|e| table.spent(table.children(), e, s)).max();
    seeded.into_iter().chain(spared).max().unwrap_or(ExtInt::NegInf)
}

/// Cells of one internal vertex for every budget `0..=budget`, given the
/// cells of its children (in child order, each of length `budget + 1`).
fn vertex_cells(exec: Exec, tau_u: i64, iota_max_u: i64, children: &[&[DpCell]], budget: usize) -> Vec<DpCell> {
    // Built over the reversed child order, so assignments are lex-least in
    // the original order.
    let profiles = children.iter().rev().map(|c| ChildProfile::from_cells(c)).collect();
    let table = MTable::build_with(exec, profiles, budget);
    let heavy = table.children() * (budget + 1) * (budget + 1) >= PAR_LEVEL_WORK;
    let exec = if heavy { exec } else { Exec::Sequential };
    par::map_indices(exec, budget + 1, |b| {
        let b = b as i64;
        let mut z = [ExtInt::NegInf; 2];
        let mut arg = [0i64; 2];
        for b_u in 0..=iota_max_u.min(b) {
            for j in 0..2 {
                let m = seeded_max(&table, tau_u + b_u - j as i64, b - b_u);
                if m > z[j] {
                    z[j] = m;
                    arg[j] = b_u;
                }
            }
        }
        if !z[0].is_finite() {
            return DpCell::infeasible();
        }
        debug_assert!(z[1] <= z[0] && z[0] <= z[1] + 1);

        // A split maximising the x1 objective also maximises x0 when the two
        // agree; otherwise x0's maximiser is within one of x1's optimum.
        let j = usize::from(z[0] == z[1]);
        let own = arg[j];
        let s = b - own;
        let need = tau_u + own - j as i64;
        let k = table.children() as i64;
        let best = (0..=k)
            .filter(|&e| {
                let v = table.spent(table.children(), e, s);
                if e < need {
                    v + 1 == z[j]
                } else {
                    v == z[j]
                }
            })
            .filter_map(|e| table.assignment(e, s))
            .map(|mut a| {
                a.reverse();
                a
            })
            .min()
            .expect("optimum is attained");
        DpCell { x0: z[0], x1: z[1], choice: Some(Choice { own, child_budgets: best }) }
    })
}

/// The cell of an internal vertex for a single budget `b`.
pub fn combine_children(tau_u: i64, iota_max_u: i64, children: &[&[DpCell]], b: usize) -> DpCell {
    let truncated: Vec<&[DpCell]> = children.iter().map(|c| &c[..=b.min(c.len() - 1)]).collect();
    vertex_cells(Exec::Sequential, tau_u, iota_max_u, &truncated, b).pop().expect("budget range is non-empty")
}

/// A cell violating `x1 <= x0 <= x1 + 1` or the feasibility pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellViolation {
    pub vertex: usize,
    pub budget: i64,
    pub cell: (ExtInt, ExtInt),
    pub capacity: i64,
}

/// The complete table for one instance.
#[derive(Clone, Debug)]
pub struct DpTable {
    tree: RootedTree,
    tau: VertexFn,
    iota_max: VertexFn,
    budget: i64,
    cells: Vec<Vec<DpCell>>,
}

impl DpTable {
    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn tau(&self) -> &VertexFn {
        &self.tau
    }

    pub fn iota_max(&self) -> &VertexFn {
        &self.iota_max
    }

    pub fn budget(&self) -> i64 {
        self.budget
    }

    pub fn cell(&self, u: usize, b: i64) -> &DpCell {
        &self.cells[u][b as usize]
    }

    /// `vacc(T, tau, iota_max, b) = x0(root, b)`.
    pub fn vacc(&self) -> i64 {
        self.cell(self.tree.root(), self.budget).x0.finite().expect("budget checked feasible")
    }

    /// Optimal increment restricted to `V_u` for budget `b`, as
    /// `(vertex, increment)` pairs; empty if the cell is infeasible.
    pub fn subtree_increment(&self, u: usize, b: i64) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        if !self.cell(u, b).is_feasible() {
            return out;
        }
        let mut stack = vec![(u, b)];
        while let Some((v, bv)) = stack.pop() {
            let choice = self.cell(v, bv).choice.as_ref().expect("feasible cells carry a choice");
            out.push((v, choice.own));
            stack.extend(self.tree.children(v).iter().copied().zip(choice.child_budgets.iter().copied()));
        }
        out.sort_unstable();
        out
    }

    /// An increment attaining [`DpTable::vacc`].
    pub fn increment(&self) -> VertexFn {
        let mut iota = vec![0; self.tree.n()];
        for (v, x) in self.subtree_increment(self.tree.root(), self.budget) {
            iota[v] = x;
        }
        VertexFn::new(iota)
    }

    pub fn verify_cells(&self) -> Vec<CellViolation> {
        let mut bad = Vec::new();
        for u in 0..self.tree.n() {
            let capacity = self.tree.subtree_capacity(u).expect("capacities attached");
            for (b, cell) in self.cells[u].iter().enumerate() {
                let b = b as i64;
                let ok = match (cell.x0, cell.x1) {
                    (ExtInt::Finite(x0), ExtInt::Finite(x1)) => b <= capacity && x1 <= x0 && x0 <= x1 + 1,
                    (ExtInt::NegInf, ExtInt::NegInf) => b > capacity,
                    _ => false,
                };
                if !ok {
                    bad.push(CellViolation { vertex: u, budget: b, cell: (cell.x0, cell.x1), capacity });
                }
            }
        }
        bad
    }
}

pub fn run_dp(tree: &RootedTree, tau: &VertexFn, iota_max: &VertexFn, budget: i64) -> Result<DpTable> {
    run_dp_with(Exec::default(), tree, tau, iota_max, budget)
}

pub fn run_dp_with(exec: Exec, tree: &RootedTree, tau: &VertexFn, iota_max: &VertexFn, budget: i64) -> Result<DpTable> {
    tau.check_len(tree.n())?;
    if budget < 0 {
        return Err(Error::NegativeBudget(budget));
    }
    let tree = tree.clone().with_capacities(iota_max)?;
    let capacity = tree.subtree_capacity(tree.root()).expect("capacities attached");
    if budget > capacity {
        return Err(Error::BudgetInfeasible { budget, capacity });
    }
    let width = budget as usize + 1;
    let mut cells: Vec<Vec<DpCell>> = vec![Vec::new(); tree.n()];
    for &u in tree.postorder() {
        let kids = tree.children(u);
        cells[u] = if kids.is_empty() {
            (0..width as i64).map(|b| leaf_cell(tau[u], iota_max[u], b)).collect()
        } else {
            let child_cells: Vec<&[DpCell]> = kids.iter().map(|&c| cells[c].as_slice()).collect();
            vertex_cells(exec, tau[u], iota_max[u], &child_cells, budget as usize)
        };
    }
    Ok(DpTable { tree, tau: tau.clone(), iota_max: iota_max.clone(), budget, cells })
}

pub fn extract_vacc(table: &DpTable) -> i64 {
    table.vacc()
}

pub fn reconstruct_increment(table: &DpTable) -> VertexFn {
    table.increment()
}

/// `dyn(T, tau)` exactly: the table with no budget.
pub fn dyn_tree(tree: &RootedTree, tau: &VertexFn) -> Result<i64> {
    Ok(run_dp(tree, tau, &VertexFn::zeros(tree.n()), 0)?.vacc())
}

/// Optimal value together with a witnessing increment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VaccSolution {
    pub value: i64,
    pub increment: VertexFn,
}

pub fn solve_vacc(tree: &RootedTree, tau: &VertexFn, iota_max: &VertexFn, budget: i64) -> Result<VaccSolution> {
    let table = run_dp(tree, tau, iota_max, budget)?;
    Ok(VaccSolution { value: table.vacc(), increment: table.increment() })
}
