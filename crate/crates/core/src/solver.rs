//! Exact branch-and-bound over bounded integer variables.
//!
//! Models carry rational coefficients; internally every constraint and the
//! objective are scaled to integers once, so the search runs on plain i128
//! arithmetic. The search is depth-first with interval-based bounds
//! propagation to a fixpoint at every node, a sound objective bound, and a
//! deterministic branch order (largest objective coefficient first, high
//! value first), so the reported optimum and the first-found witness are
//! reproducible across runs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::rat::{qi, Q};

pub type VarId = usize;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

/// A linear constraint `sum coef_i * x_i REL rhs` with rational data.
#[derive(Clone, Debug)]
pub struct LinearConstraint {
    pub terms: Vec<(VarId, Q)>,
    pub rel: Rel,
    pub rhs: Q,
}

impl LinearConstraint {
    pub fn le(terms: Vec<(VarId, Q)>, rhs: Q) -> Self {
        LinearConstraint { terms, rel: Rel::Le, rhs }
    }
    pub fn eq(terms: Vec<(VarId, Q)>, rhs: Q) -> Self {
        LinearConstraint { terms, rel: Rel::Eq, rhs }
    }
    pub fn ge(terms: Vec<(VarId, Q)>, rhs: Q) -> Self {
        LinearConstraint { terms, rel: Rel::Ge, rhs }
    }
}

/// `indicator >= 1  =>  constraint`.
#[derive(Clone, Debug)]
pub struct ConditionalConstraint {
    pub indicator: VarId,
    pub constraint: LinearConstraint,
}

#[derive(Clone, Debug)]
pub struct Variable {
    pub name: String,
    pub lo: i64,
    pub hi: i64,
}

/// An exact integer program: bounded integer variables, linear and
/// conditional constraints, linear objective, sense max.
#[derive(Clone, Debug, Default)]
pub struct BinaryProgram {
    pub variables: Vec<Variable>,
    pub constraints: Vec<LinearConstraint>,
    pub conditionals: Vec<ConditionalConstraint>,
    pub objective: Vec<(VarId, Q)>,
}

impl BinaryProgram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_var(&mut self, name: &str, lo: i64, hi: i64) -> VarId {
        assert!(lo <= hi, "empty domain for {name}");
        self.variables.push(Variable { name: name.into(), lo, hi });
        self.variables.len() - 1
    }

    pub fn add_binary(&mut self, name: &str) -> VarId {
        self.add_var(name, 0, 1)
    }

    pub fn add_constraint(&mut self, c: LinearConstraint) {
        self.constraints.push(c);
    }

    pub fn add_conditional(&mut self, indicator: VarId, c: LinearConstraint) {
        self.conditionals.push(ConditionalConstraint { indicator, constraint: c });
    }

    pub fn set_objective(&mut self, terms: Vec<(VarId, Q)>) {
        self.objective = terms;
    }

    /// Exact objective value of an assignment.
    pub fn objective_value(&self, witness: &[i64]) -> Q {
        let mut total = Q::zero();
        for (v, c) in &self.objective {
            total += c * qi(witness[*v]);
        }
        total
    }

    /// Exact feasibility check of a full assignment, by direct substitution.
    pub fn is_feasible(&self, witness: &[i64]) -> bool {
        if witness.len() != self.variables.len() {
            return false;
        }
        for (i, var) in self.variables.iter().enumerate() {
            if witness[i] < var.lo || witness[i] > var.hi {
                return false;
            }
        }
        let holds = |c: &LinearConstraint| {
            let mut lhs = Q::zero();
            for (v, coef) in &c.terms {
                lhs += coef * qi(witness[*v]);
            }
            match c.rel {
                Rel::Le => lhs <= c.rhs,
                Rel::Eq => lhs == c.rhs,
                Rel::Ge => lhs >= c.rhs,
            }
        };
        self.constraints.iter().all(&holds)
            && self.conditionals.iter().all(|cc| witness[cc.indicator] < 1 || holds(&cc.constraint))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    Infeasible,
    /// Search-node budget exceeded; never silently truncated.
    BudgetExceeded { nodes: u64 },
    Overflow(String),
}

impl core::fmt::Display for SolveError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SolveError::Infeasible => write!(f, "model is infeasible"),
            SolveError::BudgetExceeded { nodes } => {
                write!(f, "search-node budget exceeded after {nodes} nodes")
            }
            SolveError::Overflow(s) => write!(f, "coefficient scaling overflow: {s}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub optimum: Q,
    pub witness: Vec<i64>,
    pub nodes: u64,
}

/// Integer-scaled constraint: `sum a_i x_i REL b` (Ge folded into Le).
#[derive(Clone, Debug)]
struct ScaledConstraint {
    terms: Vec<(usize, i128)>,
    eq: bool,
    rhs: i128,
    /// Conditional activation variable, if any.
    indicator: Option<usize>,
}

fn scale_terms(terms: &[(VarId, Q)], rhs: &Q) -> Result<(Vec<(usize, i128)>, i128), SolveError> {
    let mut denom = BigInt::one();
    for (_, c) in terms {
        denom = denom.lcm(c.denom());
    }
    denom = denom.lcm(rhs.denom());
    let to_i128 = |x: &BigInt| -> Result<i128, SolveError> {
        x.to_i128().ok_or_else(|| SolveError::Overflow(format!("{x} does not fit in i128")))
    };
    let mut out = Vec::with_capacity(terms.len());
    for (v, c) in terms {
        let scaled = c.numer() * (&denom / c.denom());
        out.push((*v, to_i128(&scaled)?));
    }
    let b = rhs.numer() * (&denom / rhs.denom());
    Ok((out, to_i128(&b)?))
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if a % b != 0 && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if a % b != 0 && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

struct Search {
    constraints: Vec<ScaledConstraint>,
    obj: Vec<i128>,
    /// Variables in branch order.
    order: Vec<usize>,
    nodes: u64,
    budget: u64,
    best: Option<(i128, Vec<i128>)>,
}

impl Search {
    /// Narrows domains with interval arithmetic until a fixpoint.
    /// Returns false if some constraint or domain becomes impossible.
    /// Conditional constraints impose nothing until their indicator is
    /// known to be >= 1.
    fn propagate(&self, lo: &mut [i128], hi: &mut [i128]) -> bool {
        loop {
            let mut changed = false;
            for c in &self.constraints {
                if let Some(ind) = c.indicator {
                    if lo[ind] < 1 {
                        continue;
                    }
                }
                let mut min: i128 = 0;
                let mut max: i128 = 0;
                for &(v, a) in &c.terms {
                    if a >= 0 {
                        min += a * lo[v];
                        max += a * hi[v];
                    } else {
                        min += a * hi[v];
                        max += a * lo[v];
                    }
                }
                if min > c.rhs {
                    return false;
                }
                if c.eq && max < c.rhs {
                    return false;
                }
                for &(v, a) in &c.terms {
                    if a == 0 {
                        continue;
                    }
                    // Direction lhs <= rhs: a*x <= rhs - (min of the rest).
                    let own_min = if a >= 0 { a * lo[v] } else { a * hi[v] };
                    let slack = c.rhs - (min - own_min);
                    if a > 0 {
                        let bound = floor_div(slack, a);
                        if bound < hi[v] {
                            hi[v] = bound;
                            changed = true;
                        }
                    } else {
                        let bound = ceil_div(slack, a);
                        if bound > lo[v] {
                            lo[v] = bound;
                            changed = true;
                        }
                    }
                    if lo[v] > hi[v] {
                        return false;
                    }
                    if c.eq {
                        // Direction lhs >= rhs: a*x >= rhs - (max of rest).
                        let own_max = if a >= 0 { a * hi[v] } else { a * lo[v] };
                        let slack = c.rhs - (max - own_max);
                        if a > 0 {
                            let bound = ceil_div(slack, a);
                            if bound > lo[v] {
                                lo[v] = bound;
                                changed = true;
                            }
                        } else {
                            let bound = floor_div(slack, a);
                            if bound < hi[v] {
                                hi[v] = bound;
                                changed = true;
                            }
                        }
                        if lo[v] > hi[v] {
                            return false;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn objective_upper_bound(&self, lo: &[i128], hi: &[i128]) -> i128 {
        let mut total = 0i128;
        for (v, &a) in self.obj.iter().enumerate() {
            total += if a >= 0 { a * hi[v] } else { a * lo[v] };
        }
        total
    }

    fn dfs(&mut self, lo: Vec<i128>, hi: Vec<i128>, depth: usize) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExceeded { nodes: self.nodes });
        }
        let mut lo = lo;
        let mut hi = hi;
        if !self.propagate(&mut lo, &mut hi) {
            return Ok(());
        }
        if let Some((best, _)) = &self.best {
            if self.objective_upper_bound(&lo, &hi) <= *best {
                return Ok(());
            }
        }
        // Find the next unfixed variable in branch order.
        let mut pick = None;
        for i in depth..self.order.len() {
            let v = self.order[i];
            if lo[v] < hi[v] {
                pick = Some((i, v));
                break;
            }
        }
        let Some((i, v)) = pick else {
            // Everything fixed; propagation already verified active
            // constraints, but equality constraints need the exact check.
            if self.all_satisfied(&lo) {
                let value = {
                    let mut total = 0i128;
                    for (u, &a) in self.obj.iter().enumerate() {
                        total += a * lo[u];
                    }
                    total
                };
                let better = match &self.best {
                    Some((b, _)) => value > *b,
                    None => true,
                };
                if better {
                    self.best = Some((value, lo.clone()));
                }
            }
            return Ok(());
        };
        // High value first.
        let (a, b) = (lo[v], hi[v]);
        let mut value = b;
        loop {
            let mut nlo = lo.clone();
            let mut nhi = hi.clone();
            nlo[v] = value;
            nhi[v] = value;
            self.dfs(nlo, nhi, i)?;
            if value == a {
                break;
            }
            value -= 1;
        }
        Ok(())
    }

    fn all_satisfied(&self, x: &[i128]) -> bool {
        for c in &self.constraints {
            if let Some(ind) = c.indicator {
                if x[ind] < 1 {
                    continue;
                }
            }
            let lhs: i128 = c.terms.iter().map(|&(v, a)| a * x[v]).sum();
            if c.eq {
                if lhs != c.rhs {
                    return false;
                }
            } else if lhs > c.rhs {
                return false;
            }
        }
        true
    }
}

/// Default search-node budget: generous for desk-scale models.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// Certified maximum of the program, with the first-found optimal witness.
pub fn solve(bp: &BinaryProgram) -> Result<Solution, SolveError> {
    solve_with_budget(bp, DEFAULT_BUDGET)
}

pub fn solve_with_budget(bp: &BinaryProgram, budget: u64) -> Result<Solution, SolveError> {
    let nvars = bp.variables.len();
    // Scale the objective to integers over a common denominator.
    let mut obj_scale = BigInt::one();
    for (_, c) in &bp.objective {
        obj_scale = obj_scale.lcm(c.denom());
    }
    let mut obj = alloc::vec![0i128; nvars];
    for (v, c) in &bp.objective {
        let scaled = c.numer() * (&obj_scale / c.denom());
        obj[*v] += scaled
            .to_i128()
            .ok_or_else(|| SolveError::Overflow("objective coefficient".into()))?;
    }

    // Scale constraints; fold Ge into Le by negation, Eq keeps a flag.
    let mut scaled: Vec<ScaledConstraint> = Vec::new();
    let mut push = |c: &LinearConstraint, indicator: Option<usize>| -> Result<(), SolveError> {
        let (terms, rhs) = scale_terms(&c.terms, &c.rhs)?;
        match c.rel {
            Rel::Le => scaled.push(ScaledConstraint { terms, eq: false, rhs, indicator }),
            Rel::Ge => scaled.push(ScaledConstraint {
                terms: terms.iter().map(|&(v, a)| (v, -a)).collect(),
                eq: false,
                rhs: -rhs,
                indicator,
            }),
            Rel::Eq => scaled.push(ScaledConstraint { terms, eq: true, rhs, indicator }),
        }
        Ok(())
    };
    for c in &bp.constraints {
        push(c, None)?;
    }
    for cc in &bp.conditionals {
        push(&cc.constraint, Some(cc.indicator))?;
    }

    // Branch order: largest |objective coefficient| first, then id.
    let mut order: Vec<usize> = (0..nvars).collect();
    order.sort_by(|&a, &b| obj[b].abs().cmp(&obj[a].abs()).then(a.cmp(&b)));

    let lo: Vec<i128> = bp.variables.iter().map(|v| v.lo as i128).collect();
    let hi: Vec<i128> = bp.variables.iter().map(|v| v.hi as i128).collect();

    let mut search = Search {
        constraints: scaled,
        obj,
        order,
        nodes: 0,
        budget,
        best: None,
    };
    search.dfs(lo, hi, 0)?;
    let (value, witness) = search.best.clone().ok_or(SolveError::Infeasible)?;
    let witness: Vec<i64> = witness.iter().map(|&x| x as i64).collect();
    let optimum = Q::new(BigInt::from(value), obj_scale);
    debug_assert!(bp.is_feasible(&witness));
    debug_assert_eq!(bp.objective_value(&witness), optimum);
    Ok(Solution { optimum, witness, nodes: search.nodes })
}

/// Exhaustive enumeration over the full domain box; the oracle twin of
/// [`solve`] for small models.
pub fn solve_by_enumeration(bp: &BinaryProgram) -> Option<(Q, Vec<i64>)> {
    let nvars = bp.variables.len();
    let mut assign: Vec<i64> = bp.variables.iter().map(|v| v.lo).collect();
    let mut best: Option<(Q, Vec<i64>)> = None;
    loop {
        if bp.is_feasible(&assign) {
            let val = bp.objective_value(&assign);
            let better = match &best {
                Some((b, _)) => val > *b,
                None => true,
            };
            if better {
                best = Some((val, assign.clone()));
            }
        }
        // Increment mixed-radix counter.
        let mut i = 0;
        loop {
            if i == nvars {
                return best;
            }
            if assign[i] < bp.variables[i].hi {
                assign[i] += 1;
                break;
            }
            assign[i] = bp.variables[i].lo;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;

    #[test]
    fn two_binaries_with_cap() {
        let mut bp = BinaryProgram::new();
        let x = bp.add_binary("x");
        let y = bp.add_binary("y");
        bp.add_constraint(LinearConstraint::le(
            alloc::vec![(x, qi(1)), (y, qi(1))],
            qi(1),
        ));
        bp.set_objective(alloc::vec![(x, qi(1)), (y, qi(1))]);
        let s = solve(&bp).unwrap();
        assert_eq!(s.optimum, qi(1));
    }

    #[test]
    fn fixed_variables_evaluate_directly() {
        let mut bp = BinaryProgram::new();
        let x = bp.add_var("x", 3, 3);
        let y = bp.add_var("y", -2, -2);
        bp.set_objective(alloc::vec![(x, q(1, 2)), (y, q(1, 3))]);
        let s = solve(&bp).unwrap();
        assert_eq!(s.optimum, q(3, 2) - q(2, 3));
        assert_eq!(s.witness, alloc::vec![3, -2]);
    }

    #[test]
    fn infeasible_model_reports() {
        let mut bp = BinaryProgram::new();
        let x = bp.add_binary("x");
        bp.add_constraint(LinearConstraint::ge(alloc::vec![(x, qi(1))], qi(2)));
        bp.set_objective(alloc::vec![(x, qi(1))]);
        assert_eq!(solve(&bp).unwrap_err(), SolveError::Infeasible);
    }

    #[test]
    fn conditional_constraint_binds_only_when_active() {
        let mut bp = BinaryProgram::new();
        let x = bp.add_binary("x");
        let y = bp.add_var("y", 0, 5);
        // x = 1 forces y <= 1
        bp.add_conditional(x, LinearConstraint::le(alloc::vec![(y, qi(1))], qi(1)));
        bp.set_objective(alloc::vec![(x, qi(3)), (y, qi(1))]);
        let s = solve(&bp).unwrap();
        // x=1,y=1 gives 4; x=0,y=5 gives 5
        assert_eq!(s.optimum, qi(5));
        assert_eq!(s.witness[x], 0);
    }

    #[test]
    fn equality_constraints_propagate() {
        let mut bp = BinaryProgram::new();
        let x = bp.add_var("x", 0, 10);
        let y = bp.add_var("y", 0, 10);
        bp.add_constraint(LinearConstraint::eq(
            alloc::vec![(x, qi(2)), (y, qi(3))],
            qi(12),
        ));
        bp.set_objective(alloc::vec![(x, qi(1)), (y, qi(1))]);
        let s = solve(&bp).unwrap();
        // (x,y) in {(0,4),(3,2),(6,0)}; max sum is 6 at (6,0)
        assert_eq!(s.optimum, qi(6));
        assert_eq!(s.witness, alloc::vec![6, 0]);
    }

    #[test]
    fn matches_enumeration_on_a_small_model() {
        let mut bp = BinaryProgram::new();
        let v: Vec<_> = (0..6).map(|i| bp.add_var(&alloc::format!("v{i}"), 0, 2)).collect();
        bp.add_constraint(LinearConstraint::le(
            v.iter().map(|&x| (x, qi(1))).collect(),
            qi(7),
        ));
        bp.add_constraint(LinearConstraint::ge(
            alloc::vec![(v[0], qi(1)), (v[3], qi(2))],
            qi(2),
        ));
        bp.set_objective(v.iter().enumerate().map(|(i, &x)| (x, q(i as i64 + 1, 3))).collect());
        let s = solve(&bp).unwrap();
        let (opt, _) = solve_by_enumeration(&bp).unwrap();
        assert_eq!(s.optimum, opt);
    }
}
