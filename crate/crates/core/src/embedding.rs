//! Embedding tensors and averaging operators, their equivalent
//! characterizations through square-zero lifts and graph closure, and the
//! three-bracket system an embedding tensor induces on its module.

use num::Zero;

use crate::error::CoreError;
use crate::leibniz::{adjoint_rep, Representation};
use crate::matrix::LinMap;
use crate::report::CheckReport;
use crate::scalar::{add_assign, sub_assign, Scalar};
use crate::sweep::scan_family;
use crate::tensor::{Arg, Bracket3};
use crate::trileibniz::{hemisemidirect, Tri, TriLeibnizAlgebra};

pub(crate) fn require_shape(
    map: &LinMap,
    rows: usize,
    cols: usize,
    what: &'static str,
) -> Result<(), CoreError> {
    if map.rows() != rows {
        return Err(CoreError::DimMismatch { what, expected: rows, got: map.rows() });
    }
    if map.cols() != cols {
        return Err(CoreError::DimMismatch { what, expected: cols, got: map.cols() });
    }
    Ok(())
}

pub(crate) fn columns(map: &LinMap) -> Vec<Vec<Scalar>> {
    (0..map.cols())
        .map(|j| (0..map.rows()).map(|r| map.get(r, j).clone()).collect())
        .collect()
}

/// Checks that `T : V → g` is an embedding tensor: on every basis triple
/// `(u,v,w)` of `V` the bracket `[Tu,Tv,Tw]` must agree with each of
/// `Tρ^l(Tu,Tv,w)`, `Tρ^m(Tu,v,Tw)` and `Tρ^r(u,Tv,Tw)`. The three
/// comparisons are reported as the families `embedding/l`, `embedding/m`,
/// `embedding/r`.
pub fn check_embedding_tensor(t: &LinMap, rep: &Representation) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(t, n, m, "embedding tensor shape")?;
    let g = rep.algebra();
    let tc = columns(t);

    let lhs = |u: usize, v: usize, w: usize| {
        g.eval(Arg::Val(&tc[u]), Arg::Val(&tc[v]), Arg::Val(&tc[w])).unwrap()
    };
    let l = scan_family("embedding/l", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = lhs(u, v, w);
        let act = rep.left().eval(Arg::Val(&tc[u]), Arg::Val(&tc[v]), Arg::At(w)).unwrap();
        sub_assign(&mut d, &t.apply(&act).unwrap());
        d
    });
    let mid = scan_family("embedding/m", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = lhs(u, v, w);
        let act = rep.middle().eval(Arg::Val(&tc[u]), Arg::At(v), Arg::Val(&tc[w])).unwrap();
        sub_assign(&mut d, &t.apply(&act).unwrap());
        d
    });
    let r = scan_family("embedding/r", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = lhs(u, v, w);
        let act = rep.right().eval(Arg::At(u), Arg::Val(&tc[v]), Arg::Val(&tc[w])).unwrap();
        sub_assign(&mut d, &t.apply(&act).unwrap());
        d
    });
    Ok(l.merge(mid).merge(r))
}

/// Checks that a square map is an averaging operator:
/// `[Tx,Ty,Tz] = T[Tx,Ty,z] = T[Tx,y,Tz] = T[x,Ty,Tz]` — the embedding
/// tensor condition with the algebra acting on itself.
pub fn check_averaging(t: &LinMap, algebra: &Bracket3) -> Result<CheckReport, CoreError> {
    check_embedding_tensor(t, &adjoint_rep(algebra))
}

/// Checks the cubic compatibility identity of an operator `N` with each of
/// the three brackets: `[Nx,Ny,Nz] = N(Σ two-N terms) − N²(Σ one-N terms)
/// + N³[x,y,z]`. Families are `nijenhuis/vdash`, `nijenhuis/dashv`,
/// `nijenhuis/perp`, each swept over basis triples.
pub fn check_nijenhuis_operator(
    nmap: &LinMap,
    ta: &TriLeibnizAlgebra,
) -> Result<CheckReport, CoreError> {
    let n = ta.dim();
    require_shape(nmap, n, n, "operator shape")?;
    let nc = columns(nmap);

    let mut out = CheckReport::from_violations(0, Vec::new());
    for which in Tri::ALL {
        let b = ta.bracket(which);
        let tag = format!("nijenhuis/{}", which.label());
        out = out.merge(scan_family(&tag, &[n; 3], |s| {
            let [x, y, z] = [s[0], s[1], s[2]];
            let (nx, ny, nz) = (&nc[x], &nc[y], &nc[z]);

            let mut two = b.eval(Arg::At(x), Arg::Val(ny), Arg::Val(nz)).unwrap();
            add_assign(&mut two, &b.eval(Arg::Val(nx), Arg::At(y), Arg::Val(nz)).unwrap());
            add_assign(&mut two, &b.eval(Arg::Val(nx), Arg::Val(ny), Arg::At(z)).unwrap());

            let mut one = b.eval(Arg::Val(nx), Arg::At(y), Arg::At(z)).unwrap();
            add_assign(&mut one, &b.eval(Arg::At(x), Arg::Val(ny), Arg::At(z)).unwrap());
            add_assign(&mut one, &b.eval(Arg::At(x), Arg::At(y), Arg::Val(nz)).unwrap());

            let mut d = b.eval(Arg::Val(nx), Arg::Val(ny), Arg::Val(nz)).unwrap();
            sub_assign(&mut d, &nmap.apply(&two).unwrap());
            let one_n2 = nmap.apply(&nmap.apply(&one).unwrap()).unwrap();
            add_assign(&mut d, &one_n2);
            let cube = nmap
                .apply(&nmap.apply(&nmap.apply(b.fiber(x, y, z)).unwrap()).unwrap())
                .unwrap();
            sub_assign(&mut d, &cube);
            d
        }));
    }
    Ok(out)
}

/// Lifts a candidate tensor to the block operator `(x,u) ↦ (Tu, 0)` on
/// `g ⊕ V`, paired with the hemisemidirect three-bracket system it should be
/// compatible with. The lift squares to zero for every `T`; it satisfies the
/// cubic identity of [`check_nijenhuis_operator`] exactly when `T` is an
/// embedding tensor.
pub fn lift_nt(
    t: &LinMap,
    rep: &Representation,
) -> Result<(LinMap, TriLeibnizAlgebra), CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(t, n, m, "embedding tensor shape")?;
    let lift = LinMap::from_fn(n + m, n + m, |r, c| {
        if r < n && c >= n {
            t.get(r, c - n).clone()
        } else {
            Scalar::zero()
        }
    });
    Ok((lift, hemisemidirect(rep)))
}

/// Checks that the graph `{(Tu, u) : u ∈ V}` is closed under all three
/// hemisemidirect brackets: each bracket of graph vectors must again satisfy
/// `g`-part = T(V-part). Families `graph/vdash`, `graph/perp`,
/// `graph/dashv`; defects live in `g`.
pub fn graph_check(t: &LinMap, rep: &Representation) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(t, n, m, "embedding tensor shape")?;
    let hemi = hemisemidirect(rep);
    let tc = columns(t);
    let graph: Vec<Vec<Scalar>> = (0..m)
        .map(|j| {
            let mut v = crate::scalar::zeros(n + m);
            v[..n].clone_from_slice(&tc[j]);
            v[n + j] = crate::scalar::one_ref().clone();
            v
        })
        .collect();

    let mut out = CheckReport::from_violations(0, Vec::new());
    for which in [Tri::Vdash, Tri::Perp, Tri::Dashv] {
        let b = hemi.bracket(which);
        let tag = format!("graph/{}", which.label());
        out = out.merge(scan_family(&tag, &[m; 3], |s| {
            let image = b
                .eval(Arg::Val(&graph[s[0]]), Arg::Val(&graph[s[1]]), Arg::Val(&graph[s[2]]))
                .unwrap();
            let mut d = image[..n].to_vec();
            sub_assign(&mut d, &t.apply(&image[n..]).unwrap());
            d
        }));
    }
    Ok(out)
}

/// The three-bracket system a verified embedding tensor induces on its
/// module: `[u,v,w]_⊢ = ρ^l(Tu,Tv,w)`, `[u,v,w]_⊥ = ρ^m(Tu,v,Tw)`,
/// `[u,v,w]_⊣ = ρ^r(u,Tv,Tw)`. `T` intertwines each induced bracket with
/// the algebra bracket. Fails with `NotAnEmbeddingTensor` if the defining
/// condition does not hold.
pub fn induced_tri_leibniz(
    t: &LinMap,
    rep: &Representation,
) -> Result<TriLeibnizAlgebra, CoreError> {
    let report = check_embedding_tensor(t, rep)?;
    if let Some(v) = report.first() {
        return Err(CoreError::NotAnEmbeddingTensor { violation: v.clone() });
    }
    let m = rep.space_dim();
    let tc = columns(t);
    let b_vdash = Bracket3::from_fiber_fn(m, |u, v, w| {
        rep.left().eval(Arg::Val(&tc[u]), Arg::Val(&tc[v]), Arg::At(w)).unwrap()
    })
    .unwrap();
    let b_perp = Bracket3::from_fiber_fn(m, |u, v, w| {
        rep.middle().eval(Arg::Val(&tc[u]), Arg::At(v), Arg::Val(&tc[w])).unwrap()
    })
    .unwrap();
    let b_dashv = Bracket3::from_fiber_fn(m, |u, v, w| {
        rep.right().eval(Arg::At(u), Arg::Val(&tc[v]), Arg::Val(&tc[w])).unwrap()
    })
    .unwrap();
    TriLeibnizAlgebra::new(b_vdash, b_dashv, b_perp)
}
