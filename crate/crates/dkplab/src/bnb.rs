//! Exact branch and bound over two-sided integer programs.
//!
//! Every node solves its LP relaxation in exact rational arithmetic; a node
//! is pruned only on LP infeasibility (or on the exact bound when an
//! objective is present). No cuts, no presolve, no heuristics: node counts
//! measure branching behavior and nothing else.
//!
//! Branching is either on individual variables (floor splits, configurable
//! order) or on a supplied constraint direction p at the root, which
//! enumerates p.x = t for every integer t in the direction's range. The
//! split-disjunction certificate check of the knapsack hardness theory
//! lives here too.

use crate::error::{Error, Result};
use crate::instance::{Bound, IpInstance, Knapsack, UBound};
use crate::lp::{
    knapsack_extreme, lp_feasible_point, lp_optimize_rat, width, ExtValue, LpStatus, Sense,
};
use crate::mat::{IntVec, Rat, RatVec};
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchKind {
    Variable,
    /// Root-level split on a constraint direction, then variable branching
    /// inside the children.
    Constraint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BranchOrder {
    /// Priority list; the first listed variable with a fractional LP value
    /// is branched. Variables missing from the list follow in index order.
    Fixed(Vec<usize>),
    /// Fractional part closest to 1/2 wins; ties to the lowest index.
    MostFractional,
    /// Seed-derived fixed priority permutation.
    Random(u64),
}

#[derive(Debug, Clone)]
pub struct BranchStrategy {
    pub kind: BranchKind,
    pub order: BranchOrder,
    pub direction: Option<IntVec>,
    pub node_limit: Option<u64>,
    pub depth_limit: Option<u64>,
}

impl BranchStrategy {
    pub fn variable(order: BranchOrder) -> Self {
        BranchStrategy {
            kind: BranchKind::Variable,
            order,
            direction: None,
            node_limit: None,
            depth_limit: None,
        }
    }

    pub fn constraint(direction: IntVec) -> Self {
        BranchStrategy {
            kind: BranchKind::Constraint,
            order: BranchOrder::Fixed(Vec::new()),
            direction: Some(direction),
            node_limit: None,
            depth_limit: None,
        }
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }
}

impl Default for BranchStrategy {
    fn default() -> Self {
        BranchStrategy::variable(BranchOrder::Fixed(Vec::new()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveStatus {
    Infeasible,
    Feasible(IntVec),
    Optimal(IntVec, Rat),
    NodeLimit,
}

#[derive(Debug, Clone)]
pub struct TraceLine {
    pub depth: u64,
    pub fixing: String,
    pub lp_status: String,
    pub decision: String,
}

#[derive(Debug, Clone)]
pub struct BnbReport {
    pub status: SolveStatus,
    /// nodes whose LP was solved
    pub nodes_total: u64,
    /// nodes whose LP relaxation was feasible: the statistic the node
    /// lower-bound theorems speak about (nodes that cannot be pruned)
    pub nodes_lp_feasible: u64,
    pub max_depth: u64,
    pub trace: Option<Vec<TraceLine>>,
}

struct Searcher<'a> {
    base: &'a IpInstance,
    priority: Vec<usize>,
    most_fractional: bool,
    objective: Option<IntVec>,
    node_limit: Option<u64>,
    depth_limit: Option<u64>,
    nodes_total: u64,
    nodes_lp_feasible: u64,
    max_depth: u64,
    limit_hit: bool,
    incumbent: Option<(IntVec, Rat)>,
    first_feasible: Option<IntVec>,
    trace: Option<Vec<TraceLine>>,
}

/// Accumulated branch bounds of a node: per-variable intersected lower and
/// upper bounds, plus the label of the branching decision that created it.
#[derive(Clone, Default)]
struct NodeBounds {
    per_var: Vec<(usize, Bound, Bound)>,
    label: String,
}

impl NodeBounds {
    fn child(&self, var: usize, lo: Bound, hi: Bound, label: String) -> NodeBounds {
        let mut next = self.clone();
        next.label = label;
        match next.per_var.iter_mut().find(|(v, _, _)| *v == var) {
            Some((_, l, h)) => {
                *l = l.max_with(&lo);
                *h = h.min_with(&hi);
            }
            None => next.per_var.push((var, lo, hi)),
        }
        next
    }

    /// true when some variable's branch interval is already empty
    fn is_empty_box(&self) -> bool {
        self.per_var
            .iter()
            .any(|(_, l, h)| matches!((l, h), (Bound::Finite(a), Bound::Finite(b)) if a > b))
    }
}

pub fn solve(
    inst: &IpInstance,
    strategy: &BranchStrategy,
    objective: Option<&[BigInt]>,
) -> Result<BnbReport> {
    solve_traced(inst, strategy, objective, false)
}

pub fn solve_traced(
    inst: &IpInstance,
    strategy: &BranchStrategy,
    objective: Option<&[BigInt]>,
    want_trace: bool,
) -> Result<BnbReport> {
    let n = inst.num_vars();
    let priority = match &strategy.order {
        BranchOrder::Fixed(list) => {
            let mut p = list.clone();
            for j in 0..n {
                if !p.contains(&j) {
                    p.push(j);
                }
            }
            p
        }
        BranchOrder::MostFractional => (0..n).collect(),
        BranchOrder::Random(seed) => SplitMix64::new(*seed).permutation(n),
    };
    let mut s = Searcher {
        base: inst,
        priority,
        most_fractional: matches!(strategy.order, BranchOrder::MostFractional),
        objective: objective.map(|c| c.to_vec()),
        node_limit: strategy.node_limit,
        depth_limit: strategy.depth_limit,
        nodes_total: 0,
        nodes_lp_feasible: 0,
        max_depth: 0,
        limit_hit: false,
        incumbent: None,
        first_feasible: None,
        trace: if want_trace { Some(Vec::new()) } else { None },
    };

    match strategy.kind {
        BranchKind::Variable => {
            s.search(NodeBounds::default(), 0);
        }
        BranchKind::Constraint => {
            let dir = strategy.direction.as_ref().ok_or_else(|| {
                Error::ShapeMismatch("constraint branching needs a direction".into())
            })?;
            if dir.len() != n {
                return Err(Error::ShapeMismatch(
                    "direction length does not match the variable count".into(),
                ));
            }
            // root node: solved once to account for it, then children
            // p.x = t for every integer t in the direction's range
            let rep = width(inst, dir);
            s.nodes_total += 1;
            if rep.empty {
                s.log(0, "root", "infeasible", "prune");
            } else {
                s.nodes_lp_feasible += 1;
                if rep.unbounded {
                    return Err(Error::UnboundedDirection);
                }
                let lo = rep.min.as_finite().unwrap().ceil().to_integer();
                let hi = rep.max.as_finite().unwrap().floor().to_integer();
                s.log(
                    0,
                    "root",
                    "feasible",
                    &format!("split px over [{lo}, {hi}]"),
                );
                let mut t = lo.clone();
                while t <= hi {
                    if s.stop() {
                        break;
                    }
                    let mut inst_t = inst.clone();
                    inst_t.push_row(
                        dir.clone(),
                        Bound::finite_big(t.clone()),
                        Bound::finite_big(t.clone()),
                    );
                    {
                        let mut sub = Searcher {
                            base: &inst_t,
                            priority: s.priority.clone(),
                            most_fractional: s.most_fractional,
                            objective: s.objective.clone(),
                            node_limit: s.node_limit,
                            depth_limit: s.depth_limit,
                            nodes_total: s.nodes_total,
                            nodes_lp_feasible: s.nodes_lp_feasible,
                            max_depth: s.max_depth,
                            limit_hit: s.limit_hit,
                            incumbent: s.incumbent.take(),
                            first_feasible: s.first_feasible.take(),
                            trace: s.trace.take(),
                        };
                        sub.search(NodeBounds::default(), 1);
                        s.nodes_total = sub.nodes_total;
                        s.nodes_lp_feasible = sub.nodes_lp_feasible;
                        s.max_depth = sub.max_depth;
                        s.limit_hit = sub.limit_hit;
                        s.incumbent = sub.incumbent;
                        s.first_feasible = sub.first_feasible;
                        s.trace = sub.trace;
                    }
                    if s.objective.is_none() && s.first_feasible.is_some() {
                        break;
                    }
                    t += 1;
                }
            }
        }
    }
    Ok(s.finish())
}

impl<'a> Searcher<'a> {
    fn stop(&self) -> bool {
        if self.limit_hit {
            return true;
        }
        if let Some(limit) = self.node_limit {
            if self.nodes_total >= limit {
                return true;
            }
        }
        false
    }

    fn log(&mut self, depth: u64, fixing: &str, lp: &str, decision: &str) {
        if let Some(t) = self.trace.as_mut() {
            t.push(TraceLine {
                depth,
                fixing: fixing.to_string(),
                lp_status: lp.to_string(),
                decision: decision.to_string(),
            });
        }
    }

    fn node_instance(&self, node: &NodeBounds) -> IpInstance {
        let n = self.base.num_vars();
        let mut rows = self.base.a.row_vecs();
        let mut lo = self.base.lo.clone();
        let mut hi = self.base.hi.clone();
        for (var, l, h) in &node.per_var {
            let mut coef = vec![BigInt::zero(); n];
            coef[*var] = BigInt::one();
            rows.push(coef);
            lo.push(l.clone());
            hi.push(h.clone());
        }
        IpInstance {
            a: crate::mat::IntMat::from_big_rows(rows),
            lo,
            hi,
            name: None,
            provenance: None,
        }
    }

    /// Depth-first search with an explicit stack (down child first).
    fn search(&mut self, root: NodeBounds, base_depth: u64) {
        let mut stack: Vec<(NodeBounds, u64)> = vec![(root, base_depth)];
        while let Some((node, depth)) = stack.pop() {
            self.expand(node, depth, &mut stack);
            if self.limit_hit || (self.objective.is_none() && self.first_feasible.is_some()) {
                break;
            }
        }
    }

    fn expand(&mut self, node: NodeBounds, depth: u64, stack: &mut Vec<(NodeBounds, u64)>) {
        if self.stop() {
            self.limit_hit = true;
            return;
        }
        if let Some(dl) = self.depth_limit {
            if depth > dl {
                self.limit_hit = true;
                return;
            }
        }
        self.max_depth = self.max_depth.max(depth);
        let label = if node.label.is_empty() {
            "root".to_string()
        } else {
            node.label.clone()
        };
        self.nodes_total += 1;
        if node.is_empty_box() {
            self.log(depth, &label, "infeasible", "prune");
            return;
        }
        let inst = self.node_instance(&node);

        let (point, bound_value) = match &self.objective {
            None => {
                let out = lp_feasible_point(&inst);
                if out.status == LpStatus::Infeasible {
                    self.log(depth, &label, "infeasible", "prune");
                    return;
                }
                (out.point, None)
            }
            Some(c) => {
                let obj: RatVec = c.iter().map(|v| Rat::from_integer(v.clone())).collect();
                let out = lp_optimize_rat(&inst, &obj, Sense::Max);
                match out.status {
                    LpStatus::Infeasible => {
                        self.log(depth, &label, "infeasible", "prune");
                        return;
                    }
                    LpStatus::Unbounded => {
                        // documented fallback: anchor on the leading branch
                        // variable's minimum to get a finite split point
                        self.nodes_lp_feasible += 1;
                        let var = self.priority[0];
                        let mut c1 = vec![BigInt::zero(); inst.num_vars()];
                        c1[var] = BigInt::one();
                        let anchored = crate::lp::lp_optimize(&inst, &c1, Sense::Min);
                        let v = match anchored.status {
                            LpStatus::Optimal => anchored.point[var].clone(),
                            _ => Rat::zero(),
                        };
                        self.log(depth, &label, "unbounded", "anchored split");
                        self.push_children(node, depth, var, &v, stack);
                        return;
                    }
                    LpStatus::Optimal => {
                        let val = out.value.clone().unwrap();
                        if let Some((_, best)) = &self.incumbent {
                            if &val <= best {
                                self.nodes_lp_feasible += 1;
                                self.log(depth, &label, "feasible", "bound prune");
                                return;
                            }
                        }
                        (out.point, Some(val))
                    }
                }
            }
        };
        self.nodes_lp_feasible += 1;

        // pick the branching variable
        let frac_of = |r: &Rat| -> Rat { r - Rat::from_integer(r.floor().to_integer()) };
        let branch_var = if self.most_fractional {
            let mut best: Option<(usize, Rat)> = None;
            for (j, xj) in point.iter().enumerate() {
                let f = frac_of(xj);
                if f.is_zero() {
                    continue;
                }
                let dist = (f - crate::mat::ratio(1, 2)).abs();
                match &best {
                    Some((_, d)) if *d <= dist => {}
                    _ => best = Some((j, dist)),
                }
            }
            best.map(|(j, _)| j)
        } else {
            self.priority
                .iter()
                .copied()
                .find(|&j| !frac_of(&point[j]).is_zero())
        };

        let var = match branch_var {
            None => {
                // integral point: verify and record
                let x: IntVec = point.iter().map(|r| r.to_integer()).collect();
                debug_assert!(self.node_instance(&node).contains_int_point(&x));
                match bound_value {
                    None => {
                        self.log(depth, &label, "feasible", "integral point");
                        self.first_feasible = Some(x);
                    }
                    Some(v) => {
                        let better = match &self.incumbent {
                            None => true,
                            Some((_, best)) => &v > best,
                        };
                        self.log(depth, &label, "feasible", "integral incumbent");
                        if better {
                            self.incumbent = Some((x, v));
                        }
                    }
                }
                return;
            }
            Some(v) => v,
        };
        self.log(depth, &label, "feasible", &format!("branch x{var}"));
        let v = point[var].clone();
        self.push_children(node, depth, var, &v, stack);
    }

    /// Children x_var <= floor(v) and x_var >= floor(v)+1, down child first
    /// (pushed last so the stack pops it first).
    fn push_children(
        &mut self,
        node: NodeBounds,
        depth: u64,
        var: usize,
        v: &Rat,
        stack: &mut Vec<(NodeBounds, u64)>,
    ) {
        let fl = v.floor().to_integer();
        let down = node.child(
            var,
            Bound::NegInf,
            Bound::finite_big(fl.clone()),
            format!("x{var}<={fl}"),
        );
        let up = node.child(
            var,
            Bound::finite_big(&fl + 1),
            Bound::PosInf,
            format!("x{var}>={}", &fl + 1),
        );
        stack.push((up, depth + 1));
        stack.push((down, depth + 1));
    }

    fn finish(self) -> BnbReport {
        let status = if self.limit_hit {
            SolveStatus::NodeLimit
        } else if let Some((x, v)) = self.incumbent {
            SolveStatus::Optimal(x, v)
        } else if let Some(x) = self.first_feasible {
            SolveStatus::Feasible(x)
        } else {
            SolveStatus::Infeasible
        };
        BnbReport {
            status,
            nodes_total: self.nodes_total,
            nodes_lp_feasible: self.nodes_lp_feasible,
            max_depth: self.max_depth,
            trace: self.trace,
        }
    }
}

/// Split-disjunction certificate: does p.x <= k or p.x >= k+1 prove the
/// infeasibility of the knapsack? Exactly when 0 <= k < p.u and
/// max(a,p,k,u) < beta1 <= beta2 < min(a,p,k+1,u).
pub fn check_split_certificate(kp: &Knapsack, p: &[BigInt], k: &BigInt) -> Result<bool> {
    if p.len() != kp.n() {
        return Err(Error::ShapeMismatch(
            "direction length does not match the knapsack".into(),
        ));
    }
    if p.iter().any(|v| !v.is_positive()) {
        return Err(Error::ShapeMismatch("p must be positive".into()));
    }
    if k.is_negative() {
        return Ok(false);
    }
    // k < p.u (trivially true when any u_i is infinite)
    let mut pu_inf = false;
    let mut pu = BigInt::zero();
    for (pi, ui) in p.iter().zip(&kp.u) {
        match ui {
            UBound::Inf => pu_inf = true,
            UBound::Finite(u) => pu += pi * u,
        }
    }
    if !pu_inf && k >= &pu {
        return Ok(false);
    }
    let lo = knapsack_extreme(&kp.a, p, k, &kp.u, Sense::Max);
    let hi = knapsack_extreme(&kp.a, p, &(k + 1), &kp.u, Sense::Min);
    let b1 = Rat::from_integer(kp.beta1.clone());
    let b2 = Rat::from_integer(kp.beta2.clone());
    let lo_ok = match lo {
        ExtValue::NegInf => true,
        ExtValue::Finite(v) => v < b1,
        ExtValue::PosInf => false,
    };
    let hi_ok = match hi {
        ExtValue::PosInf => true,
        ExtValue::Finite(v) => b2 < v,
        ExtValue::NegInf => false,
    };
    Ok(lo_ok && hi_ok)
}

/// If the direction p has integer width zero over the relaxation, return
/// k = floor(max p.x): infeasibility is proven by branching on p.x.
/// Returns None when the relaxation is empty or some integer is attainable.
pub fn prove_by_constraint(inst: &IpInstance, p: &[BigInt]) -> Result<Option<BigInt>> {
    let rep = width(inst, p);
    if rep.empty {
        return Ok(None);
    }
    if rep.unbounded {
        return Err(Error::UnboundedDirection);
    }
    if !rep.iwidth().is_zero() {
        return Ok(None);
    }
    let mx = rep.max.as_finite().unwrap();
    let mn = rep.min.as_finite().unwrap();
    let k = mx.floor().to_integer();
    // iwidth 0 means ceil(min) = floor(max) + 1, i.e. k < min <= max < k+1
    debug_assert_eq!(mn.ceil().to_integer(), &k + 1);
    Ok(Some(k))
}
