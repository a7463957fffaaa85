//! Actions of one trilinear Leibniz algebra on another, the resulting
//! two-sided semidirect product, homomorphic embedding tensors, crossed
//! modules, and dialgebras pairing a single bracket with a compatible
//! three-bracket system.

use crate::embedding::{check_embedding_tensor, induced_tri_leibniz};
use crate::error::CoreError;
use crate::leibniz::{
    check_fundamental_identity, check_homomorphism, check_representation, Representation,
};
use crate::matrix::LinMap;
use crate::report::CheckReport;
use crate::scalar::{add_assign, sub_assign, sub_vec, zeros, Scalar};
use crate::sweep::scan_family;
use crate::tensor::{ActionKind, ActionTensor, Arg, Bracket3};
use crate::trileibniz::{check_tri_leibniz, Tri, TriLeibnizAlgebra};

/// An action of a base algebra `g` on a target algebra `h`: module tensors
/// `ρ^l : g⊗g⊗h → h`, `ρ^m : g⊗h⊗g → h`, `ρ^r : h⊗g⊗g → h` that restrict to
/// a representation on the underlying space and interact with the target
/// bracket through six further identity families (see [`check_action`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    base: Bracket3,
    target: Bracket3,
    left: ActionTensor,
    middle: ActionTensor,
    right: ActionTensor,
}

impl Action {
    pub fn new(
        base: Bracket3,
        target: Bracket3,
        left: ActionTensor,
        middle: ActionTensor,
        right: ActionTensor,
    ) -> Result<Self, CoreError> {
        let n = base.dim();
        let m = target.dim();
        for (t, kind) in [
            (&left, ActionKind::Left),
            (&middle, ActionKind::Middle),
            (&right, ActionKind::Right),
        ] {
            if t.kind() != kind {
                return Err(CoreError::DimMismatch {
                    what: "action tensor slot",
                    expected: kind as usize,
                    got: t.kind() as usize,
                });
            }
            if t.alg_dim() != n {
                return Err(CoreError::DimMismatch {
                    what: "action base dimension",
                    expected: n,
                    got: t.alg_dim(),
                });
            }
            if t.space_dim() != m {
                return Err(CoreError::DimMismatch {
                    what: "action target dimension",
                    expected: m,
                    got: t.space_dim(),
                });
            }
        }
        Ok(Action { base, target, left, middle, right })
    }

    /// Views a representation as an action on its module equipped with the
    /// zero bracket. Every valid representation yields a valid action this
    /// way, because each of the six extra families has a target bracket in
    /// every term.
    pub fn from_representation(rep: &Representation) -> Self {
        Action {
            base: rep.algebra().clone(),
            target: Bracket3::zero(rep.space_dim()),
            left: rep.left().clone(),
            middle: rep.middle().clone(),
            right: rep.right().clone(),
        }
    }

    /// The representation obtained by forgetting the target bracket.
    pub fn underlying_rep(&self) -> Representation {
        Representation::new(
            self.base.clone(),
            self.left.clone(),
            self.middle.clone(),
            self.right.clone(),
        )
        .expect("action tensors already validated")
    }

    pub fn base(&self) -> &Bracket3 {
        &self.base
    }

    pub fn target(&self) -> &Bracket3 {
        &self.target
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn target_dim(&self) -> usize {
        self.target.dim()
    }

    pub fn left(&self) -> &ActionTensor {
        &self.left
    }

    pub fn middle(&self) -> &ActionTensor {
        &self.middle
    }

    pub fn right(&self) -> &ActionTensor {
        &self.right
    }
}

/// Checks the eleven identity families of an action: the five representation
/// families on the underlying module (tags `rep/*`), then six families tying
/// the tensors to the target bracket:
///
/// * `action/l-derivation` over `(a,b,u,v,w)` — `ρ^l(a,b,·)` is a derivation
///   of the target bracket;
/// * `action/m-sum` over `(a,s,x,y,z,u,v,w)` — the three placements of
///   `ρ^m(a,s,·)` into the target bracket sum to zero;
/// * `action/r-sum` over `(s,a,x,y,z,u,v,w)` — likewise for `ρ^r(s,a,·)`;
/// * `action/l-absorb`, `action/m-absorb`, `action/r-absorb` over
///   `(a,b,u,v,w)` — acting on a target bracket equals acting on its last
///   entry alone.
///
/// Latin letters early in the alphabet range over the base, late ones over
/// the target; tuples list base indices before target indices except where
/// the tensor signature interleaves them.
pub fn check_action(act: &Action) -> CheckReport {
    let n = act.base_dim();
    let m = act.target_dim();
    let h = &act.target;
    let (rho_l, rho_m, rho_r) = (&act.left, &act.middle, &act.right);

    let mut out = check_representation(&act.underlying_rep());

    out = out.merge(scan_family("action/l-derivation", &[n, n, m, m, m], |t| {
        let [a, b, u, v, w] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = rho_l.eval(Arg::At(a), Arg::At(b), Arg::Val(h.fiber(u, v, w))).unwrap();
        sub_assign(&mut d, &h.eval(Arg::Val(rho_l.fiber(a, b, u)), Arg::At(v), Arg::At(w)).unwrap());
        sub_assign(&mut d, &h.eval(Arg::At(u), Arg::Val(rho_l.fiber(a, b, v)), Arg::At(w)).unwrap());
        sub_assign(&mut d, &h.eval(Arg::At(u), Arg::At(v), Arg::Val(rho_l.fiber(a, b, w))).unwrap());
        d
    }));

    out = out.merge(scan_family("action/m-sum", &[n, m, n, n, n, m, m, m], |t| {
        let [a, s, x, y, z, u, v, w] = [t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7]];
        let mut d = h.eval(Arg::Val(rho_m.fiber(a, s, x)), Arg::At(v), Arg::At(w)).unwrap();
        add_assign(&mut d, &h.eval(Arg::At(u), Arg::Val(rho_m.fiber(a, s, y)), Arg::At(w)).unwrap());
        add_assign(&mut d, &h.eval(Arg::At(u), Arg::At(v), Arg::Val(rho_m.fiber(a, s, z))).unwrap());
        d
    }));

    out = out.merge(scan_family("action/r-sum", &[m, n, n, n, n, m, m, m], |t| {
        let [s, a, x, y, z, u, v, w] = [t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7]];
        let mut d = h.eval(Arg::Val(rho_r.fiber(s, a, x)), Arg::At(v), Arg::At(w)).unwrap();
        add_assign(&mut d, &h.eval(Arg::At(u), Arg::Val(rho_r.fiber(s, a, y)), Arg::At(w)).unwrap());
        add_assign(&mut d, &h.eval(Arg::At(u), Arg::At(v), Arg::Val(rho_r.fiber(s, a, z))).unwrap());
        d
    }));

    out = out.merge(scan_family("action/l-absorb", &[n, n, m, m, m], |t| {
        let [a, b, u, v, w] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = rho_l.eval(Arg::At(a), Arg::At(b), Arg::Val(h.fiber(u, v, w))).unwrap();
        sub_assign(&mut d, &h.eval(Arg::At(u), Arg::At(v), Arg::Val(rho_l.fiber(a, b, w))).unwrap());
        d
    }));

    out = out.merge(scan_family("action/m-absorb", &[n, n, m, m, m], |t| {
        let [a, b, u, v, w] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = rho_m.eval(Arg::At(a), Arg::Val(h.fiber(u, v, w)), Arg::At(b)).unwrap();
        sub_assign(&mut d, &h.eval(Arg::At(u), Arg::At(v), Arg::Val(rho_m.fiber(a, w, b))).unwrap());
        d
    }));

    out = out.merge(scan_family("action/r-absorb", &[n, n, m, m, m], |t| {
        let [a, b, u, v, w] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = rho_r.eval(Arg::Val(h.fiber(u, v, w)), Arg::At(a), Arg::At(b)).unwrap();
        sub_assign(&mut d, &h.eval(Arg::At(u), Arg::At(v), Arg::Val(rho_r.fiber(w, a, b))).unwrap());
        d
    }));

    out
}

/// The two-sided semidirect product on `g ⊕ h`:
/// `[(x,u),(y,v),(z,w)] = ([x,y,z]_g, ρ^l(x,y,w) + ρ^m(x,v,z) + ρ^r(u,y,z)
/// + [u,v,w]_h)`. It satisfies the fundamental identity exactly when the
/// action is valid.
pub fn semidirect_bowtie(act: &Action) -> Bracket3 {
    let n = act.base_dim();
    let m = act.target_dim();
    let total = n + m;
    Bracket3::from_fiber_fn(total, |i, j, k| {
        let mut out = zeros(total);
        match (i < n, j < n, k < n) {
            (true, true, true) => out[..n].clone_from_slice(act.base.fiber(i, j, k)),
            (true, true, false) => out[n..].clone_from_slice(act.left.fiber(i, j, k - n)),
            (true, false, true) => out[n..].clone_from_slice(act.middle.fiber(i, j - n, k)),
            (false, true, true) => out[n..].clone_from_slice(act.right.fiber(i - n, j, k)),
            (false, false, false) => {
                out[n..].clone_from_slice(act.target.fiber(i - n, j - n, k - n))
            }
            _ => {}
        }
        out
    })
    .expect("fibers have total dimension")
}

/// Checks that `T : h → g` is a homomorphic embedding tensor: an embedding
/// tensor for the underlying representation together with a bracket
/// homomorphism from the target into the base. Requires the action itself to
/// be valid and reports the offending identity otherwise.
pub fn check_homomorphic_et(t: &LinMap, act: &Action) -> Result<CheckReport, CoreError> {
    let act_report = check_action(act);
    if let Some(v) = act_report.first() {
        return Err(CoreError::NotAnAction { violation: v.clone() });
    }
    let tensor = check_embedding_tensor(t, &act.underlying_rep())?;
    let hom = check_homomorphism(t, &act.target, &act.base)?;
    Ok(tensor.merge(hom))
}

/// Checks the six crossed-module equations for `T : h → g`:
/// equivariance (`xmod/equiv-l|m|r`) — applying `T` after an action tensor
/// matches bracketing with `Tu` in the corresponding slot — and the Peiffer
/// identities (`xmod/peiffer-l|m|r`) — each action tensor loaded with two
/// `T`-images reproduces the target bracket. A passing instance over a valid
/// action is automatically a homomorphic embedding tensor.
pub fn check_crossed_module(t: &LinMap, act: &Action) -> Result<CheckReport, CoreError> {
    let n = act.base_dim();
    let m = act.target_dim();
    if t.rows() != n || t.cols() != m {
        return Err(CoreError::DimMismatch {
            what: "crossed module map shape",
            expected: n,
            got: t.rows().max(t.cols()),
        });
    }
    let tc: Vec<Vec<Scalar>> =
        (0..m).map(|j| (0..n).map(|r| t.get(r, j).clone()).collect()).collect();
    let g = &act.base;
    let h = &act.target;
    let (rho_l, rho_m, rho_r) = (&act.left, &act.middle, &act.right);

    let mut out = scan_family("xmod/equiv-l", &[n, n, m], |s| {
        let [x, y, u] = [s[0], s[1], s[2]];
        let mut d = t.apply(rho_l.fiber(x, y, u)).unwrap();
        sub_assign(&mut d, &g.eval(Arg::At(x), Arg::At(y), Arg::Val(&tc[u])).unwrap());
        d
    });
    out = out.merge(scan_family("xmod/equiv-m", &[n, m, n], |s| {
        let [x, u, y] = [s[0], s[1], s[2]];
        let mut d = t.apply(rho_m.fiber(x, u, y)).unwrap();
        sub_assign(&mut d, &g.eval(Arg::At(x), Arg::Val(&tc[u]), Arg::At(y)).unwrap());
        d
    }));
    out = out.merge(scan_family("xmod/equiv-r", &[m, n, n], |s| {
        let [u, x, y] = [s[0], s[1], s[2]];
        let mut d = t.apply(rho_r.fiber(u, x, y)).unwrap();
        sub_assign(&mut d, &g.eval(Arg::Val(&tc[u]), Arg::At(x), Arg::At(y)).unwrap());
        d
    }));
    out = out.merge(scan_family("xmod/peiffer-l", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = rho_l.eval(Arg::Val(&tc[u]), Arg::Val(&tc[v]), Arg::At(w)).unwrap();
        sub_assign(&mut d, h.fiber(u, v, w));
        d
    }));
    out = out.merge(scan_family("xmod/peiffer-m", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = rho_m.eval(Arg::Val(&tc[u]), Arg::At(v), Arg::Val(&tc[w])).unwrap();
        sub_assign(&mut d, h.fiber(u, v, w));
        d
    }));
    out = out.merge(scan_family("xmod/peiffer-r", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = rho_r.eval(Arg::At(u), Arg::Val(&tc[v]), Arg::Val(&tc[w])).unwrap();
        sub_assign(&mut d, h.fiber(u, v, w));
        d
    }));
    Ok(out)
}

/// A single bracket together with a three-bracket system on the same space,
/// subject to eight compatibility families (see [`check_dialgebra`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriLeibnizDialgebra {
    base: Bracket3,
    tri: TriLeibnizAlgebra,
}

impl TriLeibnizDialgebra {
    pub fn new(base: Bracket3, tri: TriLeibnizAlgebra) -> Result<Self, CoreError> {
        if base.dim() != tri.dim() {
            return Err(CoreError::DimMismatch {
                what: "dialgebra dimensions",
                expected: base.dim(),
                got: tri.dim(),
            });
        }
        Ok(TriLeibnizDialgebra { base, tri })
    }

    pub fn base(&self) -> &Bracket3 {
        &self.base
    }

    pub fn tri(&self) -> &TriLeibnizAlgebra {
        &self.tri
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }
}

/// Checks a dialgebra in full: the fundamental identity of the base bracket,
/// the five families of the three-bracket system, and the eight compatibility
/// families between them, all over basis 5-tuples `(a,b,x,y,z)`:
///
/// * `dialg/vdash-derivation` — `[a,b,·]_⊢` is a derivation of the base;
/// * `dialg/perp-sum-vanishes`, `dialg/dashv-sum-vanishes` — the derivation
///   sums built from `⊥` and `⊣` vanish outright;
/// * `dialg/vdash-absorb`, `dialg/perp-absorb`, `dialg/dashv-absorb` — a base
///   bracket inside `⊢`/`⊥`/`⊣` collapses onto one slot;
/// * six `…-agree(<triangle>)` families — in specific slots the base bracket
///   is interchangeable with any of the three brackets.
pub fn check_dialgebra(d: &TriLeibnizDialgebra) -> CheckReport {
    let n = d.dim();
    let g = &d.base;
    let (vd, dv, pp) = (d.tri.b_vdash(), d.tri.b_dashv(), d.tri.b_perp());

    let mut out = check_fundamental_identity(g);
    out = out.merge(check_tri_leibniz(&d.tri));

    out = out.merge(scan_family("dialg/vdash-derivation", &[n; 5], |t| {
        let [a, b, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut s = vd.eval(Arg::At(a), Arg::At(b), Arg::Val(g.fiber(x, y, z))).unwrap();
        sub_assign(&mut s, &g.eval(Arg::Val(vd.fiber(a, b, x)), Arg::At(y), Arg::At(z)).unwrap());
        sub_assign(&mut s, &g.eval(Arg::At(x), Arg::Val(vd.fiber(a, b, y)), Arg::At(z)).unwrap());
        sub_assign(&mut s, &g.eval(Arg::At(x), Arg::At(y), Arg::Val(vd.fiber(a, b, z))).unwrap());
        s
    }));

    for (tag, b) in [("dialg/perp-sum-vanishes", pp), ("dialg/dashv-sum-vanishes", dv)] {
        out = out.merge(scan_family(tag, &[n; 5], |t| {
            let [a, b2, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
            let mut s = g.eval(Arg::Val(b.fiber(a, b2, x)), Arg::At(y), Arg::At(z)).unwrap();
            add_assign(&mut s, &g.eval(Arg::At(x), Arg::Val(b.fiber(a, b2, y)), Arg::At(z)).unwrap());
            add_assign(&mut s, &g.eval(Arg::At(x), Arg::At(y), Arg::Val(b.fiber(a, b2, z))).unwrap());
            s
        }));
    }

    out = out.merge(scan_family("dialg/vdash-absorb", &[n; 5], |t| {
        let [a, b, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut s = vd.eval(Arg::At(a), Arg::At(b), Arg::Val(g.fiber(x, y, z))).unwrap();
        sub_assign(&mut s, &g.eval(Arg::At(x), Arg::At(y), Arg::Val(vd.fiber(a, b, z))).unwrap());
        s
    }));
    out = out.merge(scan_family("dialg/perp-absorb", &[n; 5], |t| {
        let [a, b, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut s = pp.eval(Arg::At(a), Arg::Val(g.fiber(x, y, z)), Arg::At(b)).unwrap();
        sub_assign(&mut s, &g.eval(Arg::At(x), Arg::At(y), Arg::Val(pp.fiber(a, z, b))).unwrap());
        s
    }));
    out = out.merge(scan_family("dialg/dashv-absorb", &[n; 5], |t| {
        let [a, b, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut s = dv.eval(Arg::Val(g.fiber(x, y, z)), Arg::At(a), Arg::At(b)).unwrap();
        sub_assign(&mut s, &g.eval(Arg::At(x), Arg::At(y), Arg::Val(dv.fiber(z, a, b))).unwrap());
        s
    }));

    // Slot-agreement families: the base bracket and each triangle bracket are
    // interchangeable inside the stated outer bracket slot, so the defect is
    // the outer bracket applied to the difference of inner fibers.
    type Slot = (&'static str, Tri, usize);
    const SLOTS: [Slot; 6] = [
        ("dialg/vdash-first-agree", Tri::Vdash, 0),
        ("dialg/vdash-middle-agree", Tri::Vdash, 1),
        ("dialg/perp-first-agree", Tri::Perp, 0),
        ("dialg/perp-last-agree", Tri::Perp, 2),
        ("dialg/dashv-last-agree", Tri::Dashv, 2),
        ("dialg/dashv-middle-agree", Tri::Dashv, 1),
    ];
    for (name, outer, slot) in SLOTS {
        let ob = d.tri.bracket(outer);
        for inner in Tri::ALL {
            let ib = d.tri.bracket(inner);
            let tag = format!("{}({})", name, inner.label());
            out = out.merge(scan_family(&tag, &[n; 5], |t| {
                let [a, b, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
                let diff = sub_vec(g.fiber(x, y, z), ib.fiber(x, y, z));
                let args = match slot {
                    0 => [Arg::Val(&diff), Arg::At(a), Arg::At(b)],
                    1 => [Arg::At(a), Arg::Val(&diff), Arg::At(b)],
                    _ => [Arg::At(a), Arg::At(b), Arg::Val(&diff)],
                };
                ob.eval(args[0], args[1], args[2]).unwrap()
            }));
        }
    }

    out
}

/// The dialgebra a homomorphic embedding tensor induces on the target: the
/// target bracket as base, plus the three induced brackets
/// `ρ^l(Tu,Tv,w)`, `ρ^m(Tu,v,Tw)`, `ρ^r(u,Tv,Tw)`. Fails with
/// `NotHomomorphicEmbeddingTensor` unless [`check_homomorphic_et`] passes.
pub fn induced_dialgebra(t: &LinMap, act: &Action) -> Result<TriLeibnizDialgebra, CoreError> {
    let report = check_homomorphic_et(t, act)?;
    if let Some(v) = report.first() {
        return Err(CoreError::NotHomomorphicEmbeddingTensor { violation: v.clone() });
    }
    let tri = induced_tri_leibniz(t, &act.underlying_rep())
        .expect("embedding condition already verified");
    TriLeibnizDialgebra::new(act.target.clone(), tri)
}
