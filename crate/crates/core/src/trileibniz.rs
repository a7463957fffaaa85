//! Triples of interlocking trilinear brackets: the five-family axiom
//! checker, constructions from differentials, module morphisms, direct sums
//! and hemisemidirect products, and the universal quotient that presents any
//! such triple as the structure induced by an embedding tensor.

use num::Zero;

use crate::error::CoreError;
use crate::leibniz::{check_ideal, quotient, semidirect_sum, Representation};
use crate::matrix::LinMap;
use crate::report::CheckReport;
use crate::scalar::{is_zero_vec, one_ref, sub_assign, zeros, Scalar};
use crate::subspace::Subspace;
use crate::sweep::scan_family;
use crate::tensor::{ActionKind, ActionTensor, Arg, Bracket3};

/// The three bracket slots, named after the symbols `⊢`, `⊣`, `⊥` they are
/// written with. Used to select a bracket and to label violation families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    Vdash,
    Dashv,
    Perp,
}

impl Tri {
    pub const ALL: [Tri; 3] = [Tri::Vdash, Tri::Dashv, Tri::Perp];

    pub fn label(self) -> &'static str {
        match self {
            Tri::Vdash => "vdash",
            Tri::Dashv => "dashv",
            Tri::Perp => "perp",
        }
    }
}

/// A space carrying three trilinear brackets `⊢` (vdash), `⊣` (dashv) and
/// `⊥` (perp) of equal dimension. Validity against the five compatibility
/// families is checked by [`check_tri_leibniz`], not at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriLeibnizAlgebra {
    b_vdash: Bracket3,
    b_dashv: Bracket3,
    b_perp: Bracket3,
}

impl TriLeibnizAlgebra {
    pub fn new(
        b_vdash: Bracket3,
        b_dashv: Bracket3,
        b_perp: Bracket3,
    ) -> Result<Self, CoreError> {
        let n = b_vdash.dim();
        for (b, what) in [(&b_dashv, "dashv bracket dim"), (&b_perp, "perp bracket dim")] {
            if b.dim() != n {
                return Err(CoreError::DimMismatch { what, expected: n, got: b.dim() });
            }
        }
        Ok(TriLeibnizAlgebra { b_vdash, b_dashv, b_perp })
    }

    pub fn dim(&self) -> usize {
        self.b_vdash.dim()
    }

    pub fn b_vdash(&self) -> &Bracket3 {
        &self.b_vdash
    }

    pub fn b_dashv(&self) -> &Bracket3 {
        &self.b_dashv
    }

    pub fn b_perp(&self) -> &Bracket3 {
        &self.b_perp
    }

    pub fn bracket(&self, which: Tri) -> &Bracket3 {
        match which {
            Tri::Vdash => &self.b_vdash,
            Tri::Dashv => &self.b_dashv,
            Tri::Perp => &self.b_perp,
        }
    }
}

/// Checks the five compatibility families of a three-bracket system; the
/// families quantified over a bracket choice `△` are checked once per choice.
/// Families are reported in definition order with the `△` instance appended
/// in parentheses, e.g. `tri/vdash-of-vdash(perp)`; each family sweeps basis
/// tuples `(a,b,x,y,z)`.
pub fn check_tri_leibniz(ta: &TriLeibnizAlgebra) -> CheckReport {
    let n = ta.dim();
    let (vd, dv, pp) = (&ta.b_vdash, &ta.b_dashv, &ta.b_perp);
    let mut out = CheckReport::from_violations(0, Vec::new());

    // [a,b,[x,y,z]_△]_⊣ = [[a,b,x]_⊣,y,z]_⊣ + [x,[a,b,y]_⊣,z]_⊥ + [x,y,[a,b,z]_⊣]_⊢
    for t in Tri::ALL {
        let tb = ta.bracket(t);
        let tag = format!("tri/dashv-of-any({})", t.label());
        out = out.merge(scan_family(&tag, &[n; 5], |s| {
            let [a, b, x, y, z] = [s[0], s[1], s[2], s[3], s[4]];
            let mut d = zeros(n);
            dv.eval_acc(Arg::At(a), Arg::At(b), Arg::Val(tb.fiber(x, y, z)), false, &mut d).unwrap();
            dv.eval_acc(Arg::Val(dv.fiber(a, b, x)), Arg::At(y), Arg::At(z), true, &mut d).unwrap();
            pp.eval_acc(Arg::At(x), Arg::Val(dv.fiber(a, b, y)), Arg::At(z), true, &mut d).unwrap();
            vd.eval_acc(Arg::At(x), Arg::At(y), Arg::Val(dv.fiber(a, b, z)), true, &mut d).unwrap();
            d
        }));
    }

    // [a,b,[x,y,z]_⊣]_⊢ = [[a,b,x]_⊢,y,z]_⊣ + [x,[a,b,y]_△,z]_⊣ + [x,y,[a,b,z]_△]_⊣
    for t in Tri::ALL {
        let tb = ta.bracket(t);
        let tag = format!("tri/vdash-of-dashv({})", t.label());
        out = out.merge(scan_family(&tag, &[n; 5], |s| {
            let [a, b, x, y, z] = [s[0], s[1], s[2], s[3], s[4]];
            let mut d = zeros(n);
            vd.eval_acc(Arg::At(a), Arg::At(b), Arg::Val(dv.fiber(x, y, z)), false, &mut d).unwrap();
            dv.eval_acc(Arg::Val(vd.fiber(a, b, x)), Arg::At(y), Arg::At(z), true, &mut d).unwrap();
            dv.eval_acc(Arg::At(x), Arg::Val(tb.fiber(a, b, y)), Arg::At(z), true, &mut d).unwrap();
            dv.eval_acc(Arg::At(x), Arg::At(y), Arg::Val(tb.fiber(a, b, z)), true, &mut d).unwrap();
            d
        }));
    }

    // [a,b,[x,y,z]_⊢]_⊢ = [[a,b,x]_△,y,z]_⊢ + [x,[a,b,y]_△,z]_⊢ + [x,y,[a,b,z]_⊢]_⊢
    for t in Tri::ALL {
        let tb = ta.bracket(t);
        let tag = format!("tri/vdash-of-vdash({})", t.label());
        out = out.merge(scan_family(&tag, &[n; 5], |s| {
            let [a, b, x, y, z] = [s[0], s[1], s[2], s[3], s[4]];
            let mut d = zeros(n);
            vd.eval_acc(Arg::At(a), Arg::At(b), Arg::Val(vd.fiber(x, y, z)), false, &mut d).unwrap();
            vd.eval_acc(Arg::Val(tb.fiber(a, b, x)), Arg::At(y), Arg::At(z), true, &mut d).unwrap();
            vd.eval_acc(Arg::At(x), Arg::Val(tb.fiber(a, b, y)), Arg::At(z), true, &mut d).unwrap();
            vd.eval_acc(Arg::At(x), Arg::At(y), Arg::Val(vd.fiber(a, b, z)), true, &mut d).unwrap();
            d
        }));
    }

    // [a,b,[x,y,z]_⊥]_⊢ = [[a,b,x]_△,y,z]_⊥ + [x,[a,b,y]_⊢,z]_⊥ + [x,y,[a,b,z]_△]_⊥
    for t in Tri::ALL {
        let tb = ta.bracket(t);
        let tag = format!("tri/vdash-of-perp({})", t.label());
        out = out.merge(scan_family(&tag, &[n; 5], |s| {
            let [a, b, x, y, z] = [s[0], s[1], s[2], s[3], s[4]];
            let mut d = zeros(n);
            vd.eval_acc(Arg::At(a), Arg::At(b), Arg::Val(pp.fiber(x, y, z)), false, &mut d).unwrap();
            pp.eval_acc(Arg::Val(tb.fiber(a, b, x)), Arg::At(y), Arg::At(z), true, &mut d).unwrap();
            pp.eval_acc(Arg::At(x), Arg::Val(vd.fiber(a, b, y)), Arg::At(z), true, &mut d).unwrap();
            pp.eval_acc(Arg::At(x), Arg::At(y), Arg::Val(tb.fiber(a, b, z)), true, &mut d).unwrap();
            d
        }));
    }

    // [a,b,[x,y,z]_△]_⊥ = [[a,b,x]_⊥,y,z]_⊣ + [x,[a,b,y]_⊥,z]_⊥ + [x,y,[a,b,z]_⊥]_⊢
    for t in Tri::ALL {
        let tb = ta.bracket(t);
        let tag = format!("tri/perp-of-any({})", t.label());
        out = out.merge(scan_family(&tag, &[n; 5], |s| {
            let [a, b, x, y, z] = [s[0], s[1], s[2], s[3], s[4]];
            let mut d = zeros(n);
            pp.eval_acc(Arg::At(a), Arg::At(b), Arg::Val(tb.fiber(x, y, z)), false, &mut d).unwrap();
            dv.eval_acc(Arg::Val(pp.fiber(a, b, x)), Arg::At(y), Arg::At(z), true, &mut d).unwrap();
            pp.eval_acc(Arg::At(x), Arg::Val(pp.fiber(a, b, y)), Arg::At(z), true, &mut d).unwrap();
            vd.eval_acc(Arg::At(x), Arg::At(y), Arg::Val(pp.fiber(a, b, z)), true, &mut d).unwrap();
            d
        }));
    }

    out
}

/// Regards a single trilinear algebra as a three-bracket system with all
/// brackets equal. Valid whenever the input satisfies the fundamental
/// identity, and conversely.
pub fn from_3leibniz(algebra: &Bracket3) -> TriLeibnizAlgebra {
    TriLeibnizAlgebra {
        b_vdash: algebra.clone(),
        b_dashv: algebra.clone(),
        b_perp: algebra.clone(),
    }
}

/// The three-bracket system of a square-zero derivation `d`:
/// `[x,y,z]_⊣ = [x,y,dz]`, `[x,y,z]_⊥ = [x,dy,z]`, `[x,y,z]_⊢ = [dx,y,z]`.
///
/// Both preconditions are verified: `d` must be a derivation of the bracket
/// (checked first, family `diff/derivation` over basis triples) and must
/// square to zero on every basis vector.
pub fn from_differential(algebra: &Bracket3, d: &LinMap) -> Result<TriLeibnizAlgebra, CoreError> {
    let n = algebra.dim();
    if d.rows() != n || d.cols() != n {
        return Err(CoreError::DimMismatch { what: "differential shape", expected: n, got: d.rows().max(d.cols()) });
    }
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| (0..n).map(|r| d.get(r, j).clone()).collect())
        .collect();

    let derivation = scan_family("diff/derivation", &[n; 3], |t| {
        let [x, y, z] = [t[0], t[1], t[2]];
        let mut dd = d.apply(algebra.fiber(x, y, z)).unwrap();
        sub_assign(&mut dd, &algebra.eval(Arg::Val(&cols[x]), Arg::At(y), Arg::At(z)).unwrap());
        sub_assign(&mut dd, &algebra.eval(Arg::At(x), Arg::Val(&cols[y]), Arg::At(z)).unwrap());
        sub_assign(&mut dd, &algebra.eval(Arg::At(x), Arg::At(y), Arg::Val(&cols[z])).unwrap());
        dd
    });
    if let Some(v) = derivation.first() {
        return Err(CoreError::NotADerivation { violation: v.clone() });
    }
    for (j, col) in cols.iter().enumerate() {
        if !is_zero_vec(&d.apply(col).unwrap()) {
            return Err(CoreError::NotSquareZero { index: j });
        }
    }

    Ok(TriLeibnizAlgebra {
        b_dashv: Bracket3::from_fiber_fn(n, |i, j, k| {
            algebra.eval(Arg::At(i), Arg::At(j), Arg::Val(&cols[k])).unwrap()
        })
        .unwrap(),
        b_perp: Bracket3::from_fiber_fn(n, |i, j, k| {
            algebra.eval(Arg::At(i), Arg::Val(&cols[j]), Arg::At(k)).unwrap()
        })
        .unwrap(),
        b_vdash: Bracket3::from_fiber_fn(n, |i, j, k| {
            algebra.eval(Arg::Val(&cols[i]), Arg::At(j), Arg::At(k)).unwrap()
        })
        .unwrap(),
    })
}

/// The three-bracket system on a module `V` induced by a map `f : V → g`
/// that intertwines the module actions with the bracket:
/// `[u,v,w]_⊣ = ρ^r(u,fv,fw)`, `[u,v,w]_⊥ = ρ^m(fu,v,fw)`,
/// `[u,v,w]_⊢ = ρ^l(fu,fv,w)`.
///
/// The three intertwining equations are verified first (families
/// `morphism/l`, `morphism/m`, `morphism/r`).
pub fn from_rep_morphism(rep: &Representation, f: &LinMap) -> Result<TriLeibnizAlgebra, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    if f.rows() != n {
        return Err(CoreError::DimMismatch { what: "morphism codomain", expected: n, got: f.rows() });
    }
    if f.cols() != m {
        return Err(CoreError::DimMismatch { what: "morphism domain", expected: m, got: f.cols() });
    }
    let g = rep.algebra();
    let (l, mm, r) = (rep.left(), rep.middle(), rep.right());
    let fc: Vec<Vec<Scalar>> = (0..m)
        .map(|j| (0..n).map(|row| f.get(row, j).clone()).collect())
        .collect();

    let lm = scan_family("morphism/l", &[n, n, m], |t| {
        let [x, y, u] = [t[0], t[1], t[2]];
        let mut d = f.apply(l.fiber(x, y, u)).unwrap();
        sub_assign(&mut d, &g.eval(Arg::At(x), Arg::At(y), Arg::Val(&fc[u])).unwrap());
        d
    });
    let mmv = scan_family("morphism/m", &[n, m, n], |t| {
        let [x, u, y] = [t[0], t[1], t[2]];
        let mut d = f.apply(mm.fiber(x, u, y)).unwrap();
        sub_assign(&mut d, &g.eval(Arg::At(x), Arg::Val(&fc[u]), Arg::At(y)).unwrap());
        d
    });
    let rm = scan_family("morphism/r", &[m, n, n], |t| {
        let [u, x, y] = [t[0], t[1], t[2]];
        let mut d = f.apply(r.fiber(u, x, y)).unwrap();
        sub_assign(&mut d, &g.eval(Arg::Val(&fc[u]), Arg::At(x), Arg::At(y)).unwrap());
        d
    });
    if let Some(v) = lm.merge(mmv).merge(rm).first() {
        return Err(CoreError::NotAMorphism { violation: v.clone() });
    }

    Ok(TriLeibnizAlgebra {
        b_dashv: Bracket3::from_fiber_fn(m, |u, v, w| {
            r.eval(Arg::At(u), Arg::Val(&fc[v]), Arg::Val(&fc[w])).unwrap()
        })
        .unwrap(),
        b_perp: Bracket3::from_fiber_fn(m, |u, v, w| {
            mm.eval(Arg::Val(&fc[u]), Arg::At(v), Arg::Val(&fc[w])).unwrap()
        })
        .unwrap(),
        b_vdash: Bracket3::from_fiber_fn(m, |u, v, w| {
            l.eval(Arg::Val(&fc[u]), Arg::Val(&fc[v]), Arg::At(w)).unwrap()
        })
        .unwrap(),
    })
}

/// The three-bracket system on `copies` direct summands of an algebra, basis
/// ordered copy-major (`copy·n + i`). Componentwise, `⊢` sums the first
/// arguments over all copies, `⊥` the second, `⊣` the third:
/// `([x,..],[y,..],[z,..])_⊢ = ([Σx, y_c, z_c])_c`, and cyclically.
pub fn direct_sum_tri(algebra: &Bracket3, copies: usize) -> Result<TriLeibnizAlgebra, CoreError> {
    if copies == 0 {
        return Err(CoreError::EmptySum);
    }
    let n = algebra.dim();
    let total = copies * n;
    let embed = |c: usize, fiber: &[Scalar]| {
        let mut v = zeros(total);
        v[c * n..(c + 1) * n].clone_from_slice(fiber);
        v
    };
    let build = |matching: fn(usize, usize, usize) -> Option<usize>| {
        Bracket3::from_fiber_fn(total, |pp, qq, ss| {
            let (p, i) = (pp / n, pp % n);
            let (q, j) = (qq / n, qq % n);
            let (s, k) = (ss / n, ss % n);
            match matching(p, q, s) {
                Some(c) => embed(c, algebra.fiber(i, j, k)),
                None => zeros(total),
            }
        })
        .unwrap()
    };
    Ok(TriLeibnizAlgebra {
        // Summing the first argument couples the second and third copies.
        b_vdash: build(|_, q, s| (q == s).then_some(q)),
        // Summing the third argument couples the first and second copies.
        b_dashv: build(|p, q, _| (p == q).then_some(p)),
        // Summing the second argument couples the first and third copies.
        b_perp: build(|p, _, s| (p == s).then_some(p)),
    })
}

/// The hemisemidirect three-bracket system on `g ⊕ V`: every bracket keeps
/// the algebra bracket in the `g` part and feeds exactly one module slot,
/// `⊢ ↦ ρ^l(x,y,w)`, `⊥ ↦ ρ^m(x,v,z)`, `⊣ ↦ ρ^r(u,y,z)`. Satisfies the
/// five families exactly when the module axioms hold.
pub fn hemisemidirect(rep: &Representation) -> TriLeibnizAlgebra {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    let total = n + m;
    let embed_alg = |fiber: &[Scalar]| {
        let mut v = zeros(total);
        v[..n].clone_from_slice(fiber);
        v
    };
    let embed_mod = |fiber: &[Scalar]| {
        let mut v = zeros(total);
        v[n..].clone_from_slice(fiber);
        v
    };
    let b_vdash = Bracket3::from_fiber_fn(total, |p, q, s| match (p < n, q < n, s < n) {
        (true, true, true) => embed_alg(rep.algebra().fiber(p, q, s)),
        (true, true, false) => embed_mod(rep.left().fiber(p, q, s - n)),
        _ => zeros(total),
    })
    .unwrap();
    let b_perp = Bracket3::from_fiber_fn(total, |p, q, s| match (p < n, q < n, s < n) {
        (true, true, true) => embed_alg(rep.algebra().fiber(p, q, s)),
        (true, false, true) => embed_mod(rep.middle().fiber(p, q - n, s)),
        _ => zeros(total),
    })
    .unwrap();
    let b_dashv = Bracket3::from_fiber_fn(total, |p, q, s| match (p < n, q < n, s < n) {
        (true, true, true) => embed_alg(rep.algebra().fiber(p, q, s)),
        (false, true, true) => embed_mod(rep.right().fiber(p - n, q, s)),
        _ => zeros(total),
    })
    .unwrap();
    TriLeibnizAlgebra { b_vdash, b_dashv, b_perp }
}

/// The span of all pairwise differences of the three brackets over basis
/// triples. For a valid system this is an ideal of `(g, ⊢)`; that closure is
/// re-verified here and its failure reported as `IdealClosureFailure`.
pub fn associated_ideal(ta: &TriLeibnizAlgebra) -> Result<Subspace, CoreError> {
    let n = ta.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let vd = ta.b_vdash.fiber(i, j, k);
                let dv = ta.b_dashv.fiber(i, j, k);
                let pp = ta.b_perp.fiber(i, j, k);
                let mut a = vd.to_vec();
                sub_assign(&mut a, dv);
                let mut b = dv.to_vec();
                sub_assign(&mut b, pp);
                let mut c = vd.to_vec();
                sub_assign(&mut c, pp);
                gens.push(a);
                gens.push(b);
                gens.push(c);
            }
        }
    }
    let ideal = Subspace::from_rows(n, &gens)?;
    let closure = check_ideal(&ideal, &ta.b_vdash)?;
    if let Some(v) = closure.first() {
        return Err(CoreError::IdealClosureFailure { violation: v.clone() });
    }
    Ok(ideal)
}

/// Presents a three-bracket system as the structure induced by an embedding
/// tensor: quotients `(g, ⊢)` by the bracket-difference ideal, equips the
/// original space with the module structure
/// `ρ^l(x̄,ȳ,z) = [x,y,z]_⊢`, `ρ^m(x̄,z,ȳ) = [x,z,y]_⊥`,
/// `ρ^r(z,x̄,ȳ) = [z,x,y]_⊣`, and returns the projection as the tensor.
///
/// The module tensors are computed from standard-basis representatives;
/// independence from that choice is re-verified against every ideal basis
/// vector (families `quotrep/…`), failing with `QuotientIllDefined`.
pub fn universal_quotient(
    ta: &TriLeibnizAlgebra,
) -> Result<(Bracket3, Representation, LinMap), CoreError> {
    let n = ta.dim();
    let ideal = associated_ideal(ta)?;
    let (q_alg, project) = quotient(&ta.b_vdash, &ideal)?;

    let rows = ideal.basis_rows();
    let k = rows.len();
    let (vd, dv, pp) = (&ta.b_vdash, &ta.b_dashv, &ta.b_perp);
    let welldef = [
        scan_family("quotrep/l-first", &[k, n, n], |t| {
            vd.eval(Arg::Val(&rows[t[0]]), Arg::At(t[1]), Arg::At(t[2])).unwrap()
        }),
        scan_family("quotrep/l-second", &[n, k, n], |t| {
            vd.eval(Arg::At(t[0]), Arg::Val(&rows[t[1]]), Arg::At(t[2])).unwrap()
        }),
        scan_family("quotrep/m-first", &[k, n, n], |t| {
            pp.eval(Arg::Val(&rows[t[0]]), Arg::At(t[1]), Arg::At(t[2])).unwrap()
        }),
        scan_family("quotrep/m-third", &[n, n, k], |t| {
            pp.eval(Arg::At(t[0]), Arg::At(t[1]), Arg::Val(&rows[t[2]])).unwrap()
        }),
        scan_family("quotrep/r-second", &[n, k, n], |t| {
            dv.eval(Arg::At(t[0]), Arg::Val(&rows[t[1]]), Arg::At(t[2])).unwrap()
        }),
        scan_family("quotrep/r-third", &[n, n, k], |t| {
            dv.eval(Arg::At(t[0]), Arg::At(t[1]), Arg::Val(&rows[t[2]])).unwrap()
        }),
    ];
    for rep in welldef {
        if let Some(v) = rep.first() {
            return Err(CoreError::QuotientIllDefined { violation: v.clone() });
        }
    }

    let pivots = ideal.pivot_columns();
    let survivors: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let q = survivors.len();
    let left = ActionTensor::from_fiber_fn(ActionKind::Left, q, n, |a, b, u| {
        vd.fiber(survivors[a], survivors[b], u).to_vec()
    })
    .unwrap();
    let middle = ActionTensor::from_fiber_fn(ActionKind::Middle, q, n, |a, u, b| {
        pp.fiber(survivors[a], u, survivors[b]).to_vec()
    })
    .unwrap();
    let right = ActionTensor::from_fiber_fn(ActionKind::Right, q, n, |u, a, b| {
        dv.fiber(u, survivors[a], survivors[b]).to_vec()
    })
    .unwrap();
    let rep = Representation::new(q_alg.clone(), left, middle, right)?;
    Ok((q_alg, rep, project))
}

/// Embeds a three-bracket system into an algebra with an averaging operator:
/// `big` is the semidirect sum of the universal quotient with its module,
/// `T(x̄, y) = (ȳ, 0)` is the averaging operator, and `incl(x) = (0, x)`
/// identifies the original space with the module part.
pub fn averaging_embedding(
    ta: &TriLeibnizAlgebra,
) -> Result<(Bracket3, LinMap, LinMap), CoreError> {
    let n = ta.dim();
    let (q_alg, rep, project) = universal_quotient(ta)?;
    let q = q_alg.dim();
    let big = semidirect_sum(&rep);
    let avg = LinMap::from_fn(q + n, q + n, |r, c| {
        if r < q && c >= q {
            project.get(r, c - q).clone()
        } else {
            Scalar::zero()
        }
    });
    let incl = LinMap::from_fn(q + n, n, |r, c| {
        if r >= q && r - q == c {
            one_ref().clone()
        } else {
            Scalar::zero()
        }
    });
    Ok((big, avg, incl))
}
