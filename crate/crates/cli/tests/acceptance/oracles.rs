//! Reference implementations the acceptance tests compare the library
//! against. Everything here is recomputed from the definitions on a
//! different data layout than the library uses — flat structure-constant
//! lists walked per entry instead of indexed fibers, dense column vectors,
//! and a textbook Gaussian elimination — so agreement between the two
//! sides is evidence rather than tautology.

use leibniz3::leibniz::Representation;
use leibniz3::matrix::LinMap;
use leibniz3::scalar::{zeros, Scalar};
use leibniz3::tensor::{ActionTensor, Bracket3};
use leibniz3::trileibniz::TriLeibnizAlgebra;
use num::{One, Zero};

/// A trilinear map stored as a flat list of nonzero structure constants.
pub struct Table {
    entries: Vec<([usize; 4], Scalar)>,
}

impl Table {
    pub fn from_bracket(b: &Bracket3) -> Self {
        Table { entries: b.nonzero_entries() }
    }

    pub fn from_action(a: &ActionTensor) -> Self {
        Table { entries: a.nonzero_entries() }
    }

    /// Adds (or, with `subtract`, removes) the value of the map on three
    /// dense arguments into `d`.
    pub fn apply_into(
        &self,
        x: &[Scalar],
        y: &[Scalar],
        z: &[Scalar],
        subtract: bool,
        d: &mut [Scalar],
    ) {
        for ([i, j, k, o], c) in &self.entries {
            if x[*i].is_zero() || y[*j].is_zero() || z[*k].is_zero() {
                continue;
            }
            let term = &(&(&x[*i] * &y[*j]) * &z[*k]) * c;
            if subtract {
                d[*o] = &d[*o] - &term;
            } else {
                d[*o] = &d[*o] + &term;
            }
        }
    }
}

pub fn basis(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            let mut v = zeros(n);
            v[i] = Scalar::one();
            v
        })
        .collect()
}

const VD: usize = 0;
const DV: usize = 1;
const PP: usize = 2;
const TB: usize = 3;

/// One derivation rule `outer(a,b,inner(x,y,z)) = Σ_j outer_j(… inner_j(a,b,·) in slot j …)`,
/// written as (outer, inner) table indices for the left side and for each of
/// the three right-side terms.
struct Rule {
    lhs: (usize, usize),
    rhs: [(usize, usize); 3],
}

/// The five compatibility rules of a three-bracket system; rules that
/// mention table index `TB` are instantiated once per bracket choice.
const RULES: [Rule; 5] = [
    Rule { lhs: (DV, TB), rhs: [(DV, DV), (PP, DV), (VD, DV)] },
    Rule { lhs: (VD, DV), rhs: [(DV, VD), (DV, TB), (DV, TB)] },
    Rule { lhs: (VD, VD), rhs: [(VD, TB), (VD, TB), (VD, VD)] },
    Rule { lhs: (VD, PP), rhs: [(PP, TB), (PP, VD), (PP, TB)] },
    Rule { lhs: (PP, TB), rhs: [(DV, PP), (PP, PP), (VD, PP)] },
];

/// Sweeps one rule over all basis five-tuples, bailing out at the first
/// nonzero defect.
fn rule_holds(tables: &[&Table; 4], rule: &Rule, n: usize) -> bool {
    let e = basis(n);
    let mut inner_val = zeros(n);
    let mut d = zeros(n);
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        d.fill(Scalar::zero());
                        inner_val.fill(Scalar::zero());
                        tables[rule.lhs.1].apply_into(&e[x], &e[y], &e[z], false, &mut inner_val);
                        tables[rule.lhs.0].apply_into(&e[a], &e[b], &inner_val, false, &mut d);
                        let args = [x, y, z];
                        for (slot, &(outer, inner)) in rule.rhs.iter().enumerate() {
                            inner_val.fill(Scalar::zero());
                            tables[inner].apply_into(
                                &e[a],
                                &e[b],
                                &e[args[slot]],
                                false,
                                &mut inner_val,
                            );
                            let (p, q, r) = match slot {
                                0 => (&inner_val, &e[y], &e[z]),
                                1 => (&e[x], &inner_val, &e[z]),
                                _ => (&e[x], &e[y], &inner_val),
                            };
                            tables[outer].apply_into(p, q, r, true, &mut d);
                        }
                        if d.iter().any(|s| !s.is_zero()) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Fundamental identity verdict: the single derivation rule with every
/// table equal to the bracket itself.
pub fn fi_passes(b: &Bracket3) -> bool {
    let t = Table::from_bracket(b);
    let rule = Rule { lhs: (0, 0), rhs: [(0, 0), (0, 0), (0, 0)] };
    rule_holds(&[&t, &t, &t, &t], &rule, b.dim())
}

/// Three-bracket system verdict: all five rules, each instantiated with
/// every choice for the quantified table slot.
pub fn tri_passes(ta: &TriLeibnizAlgebra) -> bool {
    let vd = Table::from_bracket(ta.b_vdash());
    let dv = Table::from_bracket(ta.b_dashv());
    let pp = Table::from_bracket(ta.b_perp());
    let fixed = [&vd, &dv, &pp];
    for choice in fixed {
        let tables = [fixed[VD], fixed[DV], fixed[PP], choice];
        for rule in &RULES {
            if !rule_holds(&tables, rule, ta.dim()) {
                return false;
            }
        }
    }
    true
}

/// Row rank of a dense rational matrix by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for x in rows[r][c..].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..cols {
                let t = &rows[r][j] * &f;
                rows[i][j] = &rows[i][j] - &t;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

fn matvec(cols: &[Vec<Scalar>], v: &[Scalar], out_dim: usize) -> Vec<Scalar> {
    let mut out = zeros(out_dim);
    for (u, col) in cols.iter().enumerate() {
        if v[u].is_zero() {
            continue;
        }
        for i in 0..out_dim {
            if col[i].is_zero() {
                continue;
            }
            let t = &col[i] * &v[u];
            out[i] = &out[i] + &t;
        }
    }
    out
}

fn map_columns(t: &LinMap, rows: usize, cols: usize) -> Vec<Vec<Scalar>> {
    (0..cols).map(|c| (0..rows).map(|r| t.get(r, c).clone()).collect()).collect()
}

pub struct CohomologyDims {
    pub z1: usize,
    pub b1: usize,
    pub overlap: usize,
    pub h1: usize,
}

/// First-cohomology dimensions recomputed from scratch: the derivative of
/// the three defining identity families at `t` is evaluated on every
/// elementary generator to get the cocycle constraints, the coboundary span
/// is generated over ordered basis pairs, and all three dimensions come out
/// of rank computations alone —
/// `dim(Z ∩ B) = dim B − rank(constraints applied to the B generators)`.
pub fn cohomology_dims(t: &LinMap, rep: &Representation) -> CohomologyDims {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    let bracket = Table::from_bracket(rep.algebra());
    let acts =
        [Table::from_action(rep.left()), Table::from_action(rep.middle()), Table::from_action(rep.right())];
    let t_cols = map_columns(t, n, m);
    let e_m = basis(m);

    // Order-one defect of the generator with columns `g_cols`, stacked over
    // every family and basis triple. For family `fam` at `(u,v,w)` the value
    // is the sum of the three brackets with one argument through the
    // generator, minus the generator applied to the action value, minus the
    // base tensor applied to the two mixed action values.
    let defect_stack = |g_cols: &[Vec<Scalar>]| -> Vec<Scalar> {
        let mut stacked = Vec::with_capacity(3 * m * m * m * n);
        for (fam, act) in acts.iter().enumerate() {
            for u in 0..m {
                for v in 0..m {
                    for w in 0..m {
                        let mut d = zeros(n);
                        bracket.apply_into(&g_cols[u], &t_cols[v], &t_cols[w], false, &mut d);
                        bracket.apply_into(&t_cols[u], &g_cols[v], &t_cols[w], false, &mut d);
                        bracket.apply_into(&t_cols[u], &t_cols[v], &g_cols[w], false, &mut d);
                        // Arrange the action arguments with the family's
                        // fixed slot on the basis vector and the two moving
                        // slots on (first, second).
                        let val = |first: &[Scalar], second: &[Scalar]| -> Vec<Scalar> {
                            let mut av = zeros(m);
                            match fam {
                                0 => act.apply_into(first, second, &e_m[w], false, &mut av),
                                1 => act.apply_into(first, &e_m[v], second, false, &mut av),
                                _ => act.apply_into(&e_m[u], first, second, false, &mut av),
                            }
                            av
                        };
                        let (mu, mv) = match fam {
                            0 => (u, v),
                            1 => (u, w),
                            _ => (v, w),
                        };
                        let through_g = matvec(g_cols, &val(&t_cols[mu], &t_cols[mv]), n);
                        let mixed_a = matvec(&t_cols, &val(&g_cols[mu], &t_cols[mv]), n);
                        let mixed_b = matvec(&t_cols, &val(&t_cols[mu], &g_cols[mv]), n);
                        for i in 0..n {
                            d[i] = &d[i] - &through_g[i];
                            d[i] = &d[i] - &mixed_a[i];
                            d[i] = &d[i] - &mixed_b[i];
                        }
                        stacked.extend(d);
                    }
                }
            }
        }
        stacked
    };

    // Coboundary of the basis pair (a, b): column u is
    // T(ρ^l(a,b,e_u)) − [a,b,Te_u].
    let e_n = basis(n);
    let coboundary_cols = |a: usize, b: usize| -> Vec<Vec<Scalar>> {
        (0..m)
            .map(|u| {
                let mut av = zeros(m);
                acts[0].apply_into(&e_n[a], &e_n[b], &e_m[u], false, &mut av);
                let mut col = matvec(&t_cols, &av, n);
                bracket.apply_into(&e_n[a], &e_n[b], &t_cols[u], true, &mut col);
                col
            })
            .collect()
    };
    let flatten = |cols: &[Vec<Scalar>]| -> Vec<Scalar> {
        let mut flat = zeros(n * m);
        for (c, col) in cols.iter().enumerate() {
            for r in 0..n {
                flat[r * m + c] = col[r].clone();
            }
        }
        flat
    };

    let mut constraint_images = Vec::with_capacity(n * m);
    for r in 0..n {
        for c in 0..m {
            let mut g_cols = vec![zeros(n); m];
            g_cols[c][r] = Scalar::one();
            constraint_images.push(defect_stack(&g_cols));
        }
    }
    let z1 = n * m - rank(constraint_images);

    let mut spans = Vec::with_capacity(n * n);
    let mut span_images = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let cols = coboundary_cols(a, b);
            spans.push(flatten(&cols));
            span_images.push(defect_stack(&cols));
        }
    }
    let b1 = rank(spans);
    let overlap = b1 - rank(span_images);
    let h1 = z1 - overlap;
    CohomologyDims { z1, b1, overlap, h1 }
}
