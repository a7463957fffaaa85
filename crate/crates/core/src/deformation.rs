//! Linear deformations `T + t·T1` of an embedding tensor: the coefficient
//! identities that make the deformed map an embedding tensor for every `t`,
//! 1-cocycles and coboundaries with the resulting first cohomology space,
//! homomorphisms and equivalences between deformations, Nijenhuis elements,
//! and the two constructions they support — trivial deformations and
//! conjugated tensors.

use num::One;

use crate::embedding::{check_embedding_tensor, columns, require_shape};
use crate::error::CoreError;
use crate::leibniz::{check_homomorphism, Representation};
use crate::matrix::LinMap;
use crate::report::CheckReport;
use crate::scalar::{add_assign, sub_assign, sub_vec, Scalar};
use crate::subspace::Subspace;
use crate::sweep::scan_family;
use crate::tensor::Arg;

/// The 1-cocycles, coboundaries and first cohomology of an embedding tensor,
/// all inside the `n·m`-dimensional space of `V → g` maps flattened row-major
/// (entry `(r,c)` at index `r·m + c`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSpace {
    /// Kernel of the linear system the order-`t` identities impose on the
    /// generator.
    pub z1: Subspace,
    /// Span of the coboundaries of all ordered basis pairs of the algebra.
    pub b1: Subspace,
    /// `dim z1 − dim(b1 ∩ z1)`; the coboundary span need not lie inside the
    /// cocycle space, so the intersection is taken explicitly.
    pub h1_dim: usize,
}

fn require_vec(v: &[Scalar], dim: usize, what: &'static str) -> Result<(), CoreError> {
    if v.len() != dim {
        return Err(CoreError::DimMismatch { what, expected: dim, got: v.len() });
    }
    Ok(())
}

/// Defect of the order-`t` coefficient identity at one basis triple.
/// `fam` selects which action carries the right-hand side: 0 = left,
/// 1 = middle, 2 = right. `tc`/`oc` are the columns of `t`/`t1`.
fn order_one_defect(
    fam: usize,
    u: usize,
    v: usize,
    w: usize,
    rep: &Representation,
    t: &LinMap,
    t1: &LinMap,
    tc: &[Vec<Scalar>],
    oc: &[Vec<Scalar>],
) -> Vec<Scalar> {
    let g = rep.algebra();
    let mut d = g.eval(Arg::Val(&oc[u]), Arg::Val(&tc[v]), Arg::Val(&tc[w])).unwrap();
    add_assign(&mut d, &g.eval(Arg::Val(&tc[u]), Arg::Val(&oc[v]), Arg::Val(&tc[w])).unwrap());
    add_assign(&mut d, &g.eval(Arg::Val(&tc[u]), Arg::Val(&tc[v]), Arg::Val(&oc[w])).unwrap());
    match fam {
        0 => {
            let l = rep.left();
            let f = l.eval(Arg::Val(&tc[u]), Arg::Val(&tc[v]), Arg::At(w)).unwrap();
            sub_assign(&mut d, &t1.apply(&f).unwrap());
            let f = l.eval(Arg::Val(&oc[u]), Arg::Val(&tc[v]), Arg::At(w)).unwrap();
            sub_assign(&mut d, &t.apply(&f).unwrap());
            let f = l.eval(Arg::Val(&tc[u]), Arg::Val(&oc[v]), Arg::At(w)).unwrap();
            sub_assign(&mut d, &t.apply(&f).unwrap());
        }
        1 => {
            let m = rep.middle();
            let f = m.eval(Arg::Val(&tc[u]), Arg::At(v), Arg::Val(&tc[w])).unwrap();
            sub_assign(&mut d, &t1.apply(&f).unwrap());
            let f = m.eval(Arg::Val(&oc[u]), Arg::At(v), Arg::Val(&tc[w])).unwrap();
            sub_assign(&mut d, &t.apply(&f).unwrap());
            let f = m.eval(Arg::Val(&tc[u]), Arg::At(v), Arg::Val(&oc[w])).unwrap();
            sub_assign(&mut d, &t.apply(&f).unwrap());
        }
        _ => {
            let r = rep.right();
            let f = r.eval(Arg::At(u), Arg::Val(&tc[v]), Arg::Val(&tc[w])).unwrap();
            sub_assign(&mut d, &t1.apply(&f).unwrap());
            let f = r.eval(Arg::At(u), Arg::Val(&tc[v]), Arg::Val(&oc[w])).unwrap();
            sub_assign(&mut d, &t.apply(&f).unwrap());
            let f = r.eval(Arg::At(u), Arg::Val(&oc[v]), Arg::Val(&tc[w])).unwrap();
            sub_assign(&mut d, &t.apply(&f).unwrap());
        }
    }
    d
}

/// Checks the order-`t` coefficient identities alone: on every basis triple
/// the sum of the brackets with one argument through `t1` must match each of
/// the three mixed right-hand sides. A passing `t1` is a 1-cocycle over `t`.
/// Families `cocycle/l`, `cocycle/m`, `cocycle/r` over `(u,v,w)`.
pub fn cocycle_check(
    t1: &LinMap,
    t: &LinMap,
    rep: &Representation,
) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(t1, n, m, "deformation generator shape")?;
    require_shape(t, n, m, "embedding tensor shape")?;
    let tc = columns(t);
    let oc = columns(t1);
    let fam = |name: &str, idx: usize| {
        scan_family(name, &[m; 3], |s| {
            order_one_defect(idx, s[0], s[1], s[2], rep, t, t1, &tc, &oc)
        })
    };
    Ok(fam("cocycle/l", 0).merge(fam("cocycle/m", 1)).merge(fam("cocycle/r", 2)))
}

/// Checks that `t + t·t1` is an embedding tensor for every scalar `t`, by
/// verifying the four coefficient layers of the (degree-three) polynomial
/// identity separately: the base condition on `t` (families `embedding/*`),
/// the linear layer (families `cocycle/*`), and the quadratic and cubic
/// layers (families `deform/quadratic-l|m|r` and `deform/cubic-l|m|r`), all
/// over basis triples `(u,v,w)` of the module.
pub fn deformation_check(
    t: &LinMap,
    t1: &LinMap,
    rep: &Representation,
) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(t1, n, m, "deformation generator shape")?;
    let base = check_embedding_tensor(t, rep)?;
    let linear = cocycle_check(t1, t, rep)?;

    let g = rep.algebra();
    let tc = columns(t);
    let oc = columns(t1);
    let lhs2 = |u: usize, v: usize, w: usize| {
        let mut d = g.eval(Arg::Val(&oc[u]), Arg::Val(&oc[v]), Arg::Val(&tc[w])).unwrap();
        add_assign(&mut d, &g.eval(Arg::Val(&oc[u]), Arg::Val(&tc[v]), Arg::Val(&oc[w])).unwrap());
        add_assign(&mut d, &g.eval(Arg::Val(&tc[u]), Arg::Val(&oc[v]), Arg::Val(&oc[w])).unwrap());
        d
    };

    let q_l = scan_family("deform/quadratic-l", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let l = rep.left();
        let mut d = lhs2(u, v, w);
        let f = l.eval(Arg::Val(&oc[u]), Arg::Val(&oc[v]), Arg::At(w)).unwrap();
        sub_assign(&mut d, &t.apply(&f).unwrap());
        let f = l.eval(Arg::Val(&tc[u]), Arg::Val(&oc[v]), Arg::At(w)).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        let f = l.eval(Arg::Val(&oc[u]), Arg::Val(&tc[v]), Arg::At(w)).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        d
    });
    let q_m = scan_family("deform/quadratic-m", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mid = rep.middle();
        let mut d = lhs2(u, v, w);
        let f = mid.eval(Arg::Val(&oc[u]), Arg::At(v), Arg::Val(&oc[w])).unwrap();
        sub_assign(&mut d, &t.apply(&f).unwrap());
        let f = mid.eval(Arg::Val(&tc[u]), Arg::At(v), Arg::Val(&oc[w])).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        let f = mid.eval(Arg::Val(&oc[u]), Arg::At(v), Arg::Val(&tc[w])).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        d
    });
    let q_r = scan_family("deform/quadratic-r", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let r = rep.right();
        let mut d = lhs2(u, v, w);
        let f = r.eval(Arg::At(u), Arg::Val(&oc[v]), Arg::Val(&oc[w])).unwrap();
        sub_assign(&mut d, &t.apply(&f).unwrap());
        let f = r.eval(Arg::At(u), Arg::Val(&tc[v]), Arg::Val(&oc[w])).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        let f = r.eval(Arg::At(u), Arg::Val(&oc[v]), Arg::Val(&tc[w])).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        d
    });

    let cubic_lhs = |u: usize, v: usize, w: usize| {
        g.eval(Arg::Val(&oc[u]), Arg::Val(&oc[v]), Arg::Val(&oc[w])).unwrap()
    };
    let c_l = scan_family("deform/cubic-l", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = cubic_lhs(u, v, w);
        let f = rep.left().eval(Arg::Val(&oc[u]), Arg::Val(&oc[v]), Arg::At(w)).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        d
    });
    let c_m = scan_family("deform/cubic-m", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = cubic_lhs(u, v, w);
        let f = rep.middle().eval(Arg::Val(&oc[u]), Arg::At(v), Arg::Val(&oc[w])).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        d
    });
    let c_r = scan_family("deform/cubic-r", &[m; 3], |s| {
        let [u, v, w] = [s[0], s[1], s[2]];
        let mut d = cubic_lhs(u, v, w);
        let f = rep.right().eval(Arg::At(u), Arg::Val(&oc[v]), Arg::Val(&oc[w])).unwrap();
        sub_assign(&mut d, &t1.apply(&f).unwrap());
        d
    });

    Ok(base
        .merge(linear)
        .merge(q_l)
        .merge(q_m)
        .merge(q_r)
        .merge(c_l)
        .merge(c_m)
        .merge(c_r))
}

/// The coboundary of the ordered pair `(a, b)`: the map
/// `u ↦ T ρ^l(a,b,u) − [a,b,Tu]`, bilinear in `(a, b)`. It measures how far
/// `t` is from intertwining the two left actions of the pair.
pub fn coboundary(
    a: &[Scalar],
    b: &[Scalar],
    t: &LinMap,
    rep: &Representation,
) -> Result<LinMap, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_vec(a, n, "algebra element length")?;
    require_vec(b, n, "algebra element length")?;
    require_shape(t, n, m, "embedding tensor shape")?;
    let g = rep.algebra();
    let l = rep.left();
    let tc = columns(t);
    let cols: Vec<Vec<Scalar>> = (0..m)
        .map(|u| {
            let act = l.eval(Arg::Val(a), Arg::Val(b), Arg::At(u)).unwrap();
            let mut d = t.apply(&act).unwrap();
            sub_assign(&mut d, &g.eval(Arg::Val(a), Arg::Val(b), Arg::Val(&tc[u])).unwrap());
            d
        })
        .collect();
    Ok(LinMap::from_fn(n, m, |r, c| cols[c][r].clone()))
}

/// Computes the cocycle space, the coboundary span, and the dimension of
/// their quotient for a verified embedding tensor.
///
/// The cocycle space is the kernel of the linear system the order-`t`
/// identities impose on the `n·m` entries of a generator; the coboundary
/// span is generated by [`coboundary`] over all ordered basis pairs. The
/// reported dimension is `dim Z¹ − dim(B¹ ∩ Z¹)`.
pub fn cocycle_space(t: &LinMap, rep: &Representation) -> Result<CocycleSpace, CoreError> {
    let report = check_embedding_tensor(t, rep)?;
    if let Some(v) = report.first() {
        return Err(CoreError::NotAnEmbeddingTensor { violation: v.clone() });
    }
    let n = rep.alg_dim();
    let m = rep.space_dim();
    let tc = columns(t);

    // One column of the constraint matrix per elementary generator E_rc;
    // rows stack the three family defects for each basis triple.
    let mut cols_data: Vec<Vec<Scalar>> = Vec::with_capacity(n * m);
    for r in 0..n {
        for c in 0..m {
            let mut e = LinMap::zero(n, m);
            e.set(r, c, Scalar::one());
            let ec = columns(&e);
            let mut stacked = Vec::with_capacity(3 * m * m * m * n);
            for u in 0..m {
                for v in 0..m {
                    for w in 0..m {
                        for fam in 0..3 {
                            stacked.extend(order_one_defect(fam, u, v, w, rep, t, &e, &tc, &ec));
                        }
                    }
                }
            }
            cols_data.push(stacked);
        }
    }
    let rows_total = 3 * m * m * m * n;
    let constraint = LinMap::from_fn(rows_total, n * m, |i, j| cols_data[j][i].clone());
    let z1 = constraint.kernel_basis();

    let mut gens = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut a = crate::scalar::zeros(n);
            a[i] = Scalar::one();
            let mut b = crate::scalar::zeros(n);
            b[j] = Scalar::one();
            gens.push(coboundary(&a, &b, t, rep)?.to_flat_vec());
        }
    }
    let b1 = Subspace::from_rows(n * m, &gens)?;
    let cap = b1.intersect(&z1)?;
    let h1_dim = z1.dim() - cap.dim();
    Ok(CocycleSpace { z1, b1, h1_dim })
}

/// Verifies that two generators differ by the coboundary of `(a, b)`:
/// `t1_tilde(u) − t1(u) = (coboundary of (a,b))(u)` on every basis vector.
/// Family `equiv/witness` over `u`.
pub fn equivalence_witness_check(
    t1: &LinMap,
    t1_tilde: &LinMap,
    a: &[Scalar],
    b: &[Scalar],
    t: &LinMap,
    rep: &Representation,
) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(t1, n, m, "deformation generator shape")?;
    require_shape(t1_tilde, n, m, "deformation generator shape")?;
    let delta = coboundary(a, b, t, rep)?;
    let oc = columns(t1);
    let nc = columns(t1_tilde);
    let dc = columns(&delta);
    Ok(scan_family("equiv/witness", &[m], |s| {
        let u = s[0];
        let mut d = sub_vec(&nc[u], &oc[u]);
        sub_assign(&mut d, &dc[u]);
        d
    }))
}

/// The three intertwining families a map pair `(phi, psi)` must satisfy with
/// the actions: `psi ρ^l(x,y,u) = ρ^l(phi x, phi y, psi u)` and its middle
/// and right analogues. Families `ethom/l`, `ethom/m`, `ethom/r`.
fn intertwining_families(phi: &LinMap, psi: &LinMap, rep: &Representation) -> CheckReport {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    let pc = columns(phi);
    let qc = columns(psi);
    let l = scan_family("ethom/l", &[n, n, m], |s| {
        let [x, y, u] = [s[0], s[1], s[2]];
        let mut d = psi.apply(rep.left().fiber(x, y, u)).unwrap();
        let rhs = rep
            .left()
            .eval(Arg::Val(&pc[x]), Arg::Val(&pc[y]), Arg::Val(&qc[u]))
            .unwrap();
        sub_assign(&mut d, &rhs);
        d
    });
    let mid = scan_family("ethom/m", &[n, m, n], |s| {
        let [x, u, y] = [s[0], s[1], s[2]];
        let mut d = psi.apply(rep.middle().fiber(x, u, y)).unwrap();
        let rhs = rep
            .middle()
            .eval(Arg::Val(&pc[x]), Arg::Val(&qc[u]), Arg::Val(&pc[y]))
            .unwrap();
        sub_assign(&mut d, &rhs);
        d
    });
    let r = scan_family("ethom/r", &[m, n, n], |s| {
        let [u, x, y] = [s[0], s[1], s[2]];
        let mut d = psi.apply(rep.right().fiber(u, x, y)).unwrap();
        let rhs = rep
            .right()
            .eval(Arg::Val(&qc[u]), Arg::Val(&pc[x]), Arg::Val(&pc[y]))
            .unwrap();
        sub_assign(&mut d, &rhs);
        d
    });
    l.merge(mid).merge(r)
}

/// Checks that `(phi, psi)` is a homomorphism of embedding tensors from
/// `t_src` to `t_dst`: `phi` intertwines the algebra bracket with itself
/// (family `hom/bracket`), the pair intertwines all three actions (families
/// `ethom/l|m|r`), and the square `t_dst ∘ psi = phi ∘ t_src` closes (family
/// `ethom/square` over basis vectors of the module).
pub fn check_et_homomorphism(
    phi: &LinMap,
    psi: &LinMap,
    t_src: &LinMap,
    t_dst: &LinMap,
    rep: &Representation,
) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(phi, n, n, "algebra map shape")?;
    require_shape(psi, m, m, "module map shape")?;
    require_shape(t_src, n, m, "embedding tensor shape")?;
    require_shape(t_dst, n, m, "embedding tensor shape")?;
    let g = rep.algebra();
    let hom = check_homomorphism(phi, g, g)?;
    let tw = intertwining_families(phi, psi, rep);
    let sc = columns(t_src);
    let qc = columns(psi);
    let square = scan_family("ethom/square", &[m], |s| {
        let u = s[0];
        let mut d = t_dst.apply(&qc[u]).unwrap();
        sub_assign(&mut d, &phi.apply(&sc[u]).unwrap());
        d
    });
    Ok(hom.merge(tw).merge(square))
}

/// The eleven coefficient families that make the shear pair of `(a, b)` —
/// `x ↦ x + t[a,b,x]` on the algebra and `u ↦ u + tρ^l(a,b,u)` on the
/// module — a homomorphism candidate order by order: two bracket families
/// (`witness/hom-quadratic`, `witness/hom-cubic` over algebra triples) and
/// three action families at each order in the pair
/// (`witness/rep-linear-*`, `witness/rep-quadratic-*`, `witness/rep-cubic-*`).
fn witness_families(a: &[Scalar], b: &[Scalar], rep: &Representation) -> CheckReport {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    let g = rep.algebra();
    let (l, mid, r) = (rep.left(), rep.middle(), rep.right());
    let abx: Vec<Vec<Scalar>> =
        (0..n).map(|x| g.eval(Arg::Val(a), Arg::Val(b), Arg::At(x)).unwrap()).collect();
    let rlu: Vec<Vec<Scalar>> =
        (0..m).map(|u| l.eval(Arg::Val(a), Arg::Val(b), Arg::At(u)).unwrap()).collect();

    let hom_q = scan_family("witness/hom-quadratic", &[n; 3], |s| {
        let [x, y, z] = [s[0], s[1], s[2]];
        let mut d = g.eval(Arg::Val(&abx[x]), Arg::Val(&abx[y]), Arg::At(z)).unwrap();
        add_assign(&mut d, &g.eval(Arg::Val(&abx[x]), Arg::At(y), Arg::Val(&abx[z])).unwrap());
        add_assign(&mut d, &g.eval(Arg::At(x), Arg::Val(&abx[y]), Arg::Val(&abx[z])).unwrap());
        d
    });
    let hom_c = scan_family("witness/hom-cubic", &[n; 3], |s| {
        let [x, y, z] = [s[0], s[1], s[2]];
        g.eval(Arg::Val(&abx[x]), Arg::Val(&abx[y]), Arg::Val(&abx[z])).unwrap()
    });

    let lin_l = scan_family("witness/rep-linear-l", &[n, n, m], |s| {
        let [x, y, u] = [s[0], s[1], s[2]];
        let mut d = l.eval(Arg::Val(a), Arg::Val(b), Arg::Val(l.fiber(x, y, u))).unwrap();
        sub_assign(&mut d, &l.eval(Arg::Val(&abx[x]), Arg::At(y), Arg::At(u)).unwrap());
        sub_assign(&mut d, &l.eval(Arg::At(x), Arg::Val(&abx[y]), Arg::At(u)).unwrap());
        sub_assign(&mut d, &l.eval(Arg::At(x), Arg::At(y), Arg::Val(&rlu[u])).unwrap());
        d
    });
    let lin_m = scan_family("witness/rep-linear-m", &[n, m, n], |s| {
        let [x, u, y] = [s[0], s[1], s[2]];
        let mut d = l.eval(Arg::Val(a), Arg::Val(b), Arg::Val(mid.fiber(x, u, y))).unwrap();
        sub_assign(&mut d, &mid.eval(Arg::Val(&abx[x]), Arg::At(u), Arg::At(y)).unwrap());
        sub_assign(&mut d, &mid.eval(Arg::At(x), Arg::Val(&rlu[u]), Arg::At(y)).unwrap());
        sub_assign(&mut d, &mid.eval(Arg::At(x), Arg::At(u), Arg::Val(&abx[y])).unwrap());
        d
    });
    let lin_r = scan_family("witness/rep-linear-r", &[m, n, n], |s| {
        let [u, x, y] = [s[0], s[1], s[2]];
        let mut d = l.eval(Arg::Val(a), Arg::Val(b), Arg::Val(r.fiber(u, x, y))).unwrap();
        sub_assign(&mut d, &r.eval(Arg::Val(&rlu[u]), Arg::At(x), Arg::At(y)).unwrap());
        sub_assign(&mut d, &r.eval(Arg::At(u), Arg::Val(&abx[x]), Arg::At(y)).unwrap());
        sub_assign(&mut d, &r.eval(Arg::At(u), Arg::At(x), Arg::Val(&abx[y])).unwrap());
        d
    });

    let quad_l = scan_family("witness/rep-quadratic-l", &[n, n, m], |s| {
        let [x, y, u] = [s[0], s[1], s[2]];
        let mut d = l.eval(Arg::At(x), Arg::Val(&abx[y]), Arg::Val(&rlu[u])).unwrap();
        add_assign(&mut d, &l.eval(Arg::Val(&abx[x]), Arg::At(y), Arg::Val(&rlu[u])).unwrap());
        add_assign(&mut d, &l.eval(Arg::Val(&abx[x]), Arg::Val(&abx[y]), Arg::At(u)).unwrap());
        d
    });
    let quad_m = scan_family("witness/rep-quadratic-m", &[n, m, n], |s| {
        let [x, u, y] = [s[0], s[1], s[2]];
        let mut d = mid.eval(Arg::At(x), Arg::Val(&rlu[u]), Arg::Val(&abx[y])).unwrap();
        add_assign(&mut d, &mid.eval(Arg::Val(&abx[x]), Arg::At(u), Arg::Val(&abx[y])).unwrap());
        add_assign(&mut d, &mid.eval(Arg::Val(&abx[x]), Arg::Val(&rlu[u]), Arg::At(y)).unwrap());
        d
    });
    let quad_r = scan_family("witness/rep-quadratic-r", &[m, n, n], |s| {
        let [u, x, y] = [s[0], s[1], s[2]];
        let mut d = r.eval(Arg::At(u), Arg::Val(&abx[x]), Arg::Val(&abx[y])).unwrap();
        add_assign(&mut d, &r.eval(Arg::Val(&rlu[u]), Arg::At(x), Arg::Val(&abx[y])).unwrap());
        add_assign(&mut d, &r.eval(Arg::Val(&rlu[u]), Arg::Val(&abx[x]), Arg::At(y)).unwrap());
        d
    });

    let cub_l = scan_family("witness/rep-cubic-l", &[n, n, m], |s| {
        let [x, y, u] = [s[0], s[1], s[2]];
        l.eval(Arg::Val(&abx[x]), Arg::Val(&abx[y]), Arg::Val(&rlu[u])).unwrap()
    });
    let cub_m = scan_family("witness/rep-cubic-m", &[n, m, n], |s| {
        let [x, u, y] = [s[0], s[1], s[2]];
        mid.eval(Arg::Val(&abx[x]), Arg::Val(&rlu[u]), Arg::Val(&abx[y])).unwrap()
    });
    let cub_r = scan_family("witness/rep-cubic-r", &[m, n, n], |s| {
        let [u, x, y] = [s[0], s[1], s[2]];
        r.eval(Arg::Val(&rlu[u]), Arg::Val(&abx[x]), Arg::Val(&abx[y])).unwrap()
    });

    hom_q
        .merge(hom_c)
        .merge(lin_l)
        .merge(lin_m)
        .merge(lin_r)
        .merge(quad_l)
        .merge(quad_m)
        .merge(quad_r)
        .merge(cub_l)
        .merge(cub_m)
        .merge(cub_r)
}

/// Checks that the shear pair of `(a, b)` carries the deformation generated
/// by `t1_src` to the one generated by `t1_dst`: the eleven
/// [`witness`](check_nijenhuis_element) coefficient families of the pair,
/// plus the two square families over basis vectors `u` —
/// `equiv/shift`: `t1_dst(u) + Tρ^l(a,b,u) = t1_src(u) + [a,b,Tu]`, and
/// `equiv/shift-quadratic`: `t1_dst(ρ^l(a,b,u)) = [a,b,t1_src(u)]`.
pub fn deformation_equivalence_check(
    t: &LinMap,
    t1_src: &LinMap,
    t1_dst: &LinMap,
    a: &[Scalar],
    b: &[Scalar],
    rep: &Representation,
) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_vec(a, n, "algebra element length")?;
    require_vec(b, n, "algebra element length")?;
    require_shape(t, n, m, "embedding tensor shape")?;
    require_shape(t1_src, n, m, "deformation generator shape")?;
    require_shape(t1_dst, n, m, "deformation generator shape")?;
    let g = rep.algebra();
    let l = rep.left();
    let tc = columns(t);
    let sc = columns(t1_src);
    let dc = columns(t1_dst);
    let rlu: Vec<Vec<Scalar>> =
        (0..m).map(|u| l.eval(Arg::Val(a), Arg::Val(b), Arg::At(u)).unwrap()).collect();

    let base = witness_families(a, b, rep);
    let shift = scan_family("equiv/shift", &[m], |s| {
        let u = s[0];
        let mut d = dc[u].clone();
        add_assign(&mut d, &t.apply(&rlu[u]).unwrap());
        sub_assign(&mut d, &sc[u]);
        sub_assign(&mut d, &g.eval(Arg::Val(a), Arg::Val(b), Arg::Val(&tc[u])).unwrap());
        d
    });
    let shift_q = scan_family("equiv/shift-quadratic", &[m], |s| {
        let u = s[0];
        let mut d = t1_dst.apply(&rlu[u]).unwrap();
        sub_assign(&mut d, &g.eval(Arg::Val(a), Arg::Val(b), Arg::Val(&sc[u])).unwrap());
        d
    });
    Ok(base.merge(shift).merge(shift_q))
}

/// Checks that `(a, b)` is a Nijenhuis element for `t`: the eleven shear
/// coefficient families of the pair, plus the bracket-absorption family
/// `witness/coboundary-bracket` over basis vectors `u`:
/// `[a, b, (coboundary of (a,b))(u)] = 0`.
pub fn check_nijenhuis_element(
    a: &[Scalar],
    b: &[Scalar],
    t: &LinMap,
    rep: &Representation,
) -> Result<CheckReport, CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_vec(a, n, "algebra element length")?;
    require_vec(b, n, "algebra element length")?;
    require_shape(t, n, m, "embedding tensor shape")?;
    let delta = coboundary(a, b, t, rep)?;
    let dc = columns(&delta);
    let g = rep.algebra();
    let base = witness_families(a, b, rep);
    let cb = scan_family("witness/coboundary-bracket", &[m], |s| {
        g.eval(Arg::Val(a), Arg::Val(b), Arg::Val(&dc[s[0]])).unwrap()
    });
    Ok(base.merge(cb))
}

/// Filters candidate pairs through [`check_nijenhuis_element`], preserving
/// order. `None` scans all ordered basis pairs of the algebra.
pub fn nijenhuis_element_scan(
    t: &LinMap,
    rep: &Representation,
    candidates: Option<&[(Vec<Scalar>, Vec<Scalar>)]>,
) -> Result<Vec<(Vec<Scalar>, Vec<Scalar>)>, CoreError> {
    let n = rep.alg_dim();
    let owned: Vec<(Vec<Scalar>, Vec<Scalar>)>;
    let list = match candidates {
        Some(c) => c,
        None => {
            owned = (0..n)
                .flat_map(|i| {
                    (0..n).map(move |j| {
                        let mut a = crate::scalar::zeros(n);
                        a[i] = Scalar::one();
                        let mut b = crate::scalar::zeros(n);
                        b[j] = Scalar::one();
                        (a, b)
                    })
                })
                .collect();
            &owned
        }
    };
    let mut passing = Vec::new();
    for (a, b) in list {
        if check_nijenhuis_element(a, b, t, rep)?.passed() {
            passing.push((a.clone(), b.clone()));
        }
    }
    Ok(passing)
}

/// Builds the trivial deformation a Nijenhuis element generates: the
/// generator is the coboundary of `(a, b)`, and the returned report combines
/// [`deformation_check`] with the equivalence families that carry it to the
/// zero generator. Fails with `NotANijenhuisElement` when the pair does not
/// verify.
pub fn trivial_deformation(
    a: &[Scalar],
    b: &[Scalar],
    t: &LinMap,
    rep: &Representation,
) -> Result<(LinMap, CheckReport), CoreError> {
    let nij = check_nijenhuis_element(a, b, t, rep)?;
    if let Some(v) = nij.first() {
        return Err(CoreError::NotANijenhuisElement { violation: v.clone() });
    }
    let t1 = coboundary(a, b, t, rep)?;
    let zero = LinMap::zero(rep.alg_dim(), rep.space_dim());
    let report = deformation_check(t, &t1, rep)?
        .merge(deformation_equivalence_check(t, &t1, &zero, a, b, rep)?);
    Ok((t1, report))
}

/// Conjugates `t` through an invertible pair: `phi` must be an invertible
/// bracket homomorphism of the algebra and `(phi, psi)` must satisfy the
/// three intertwining families; the result is `phi⁻¹ ∘ t ∘ psi` together
/// with its embedding-tensor report (which the hypotheses force to pass).
pub fn conjugate_et(
    t: &LinMap,
    phi: &LinMap,
    psi: &LinMap,
    rep: &Representation,
) -> Result<(LinMap, CheckReport), CoreError> {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    require_shape(t, n, m, "embedding tensor shape")?;
    require_shape(phi, n, n, "algebra map shape")?;
    require_shape(psi, m, m, "module map shape")?;
    let Some(phi_inv) = phi.inverse() else {
        return Err(CoreError::NotInvertible { what: "phi" });
    };
    if psi.inverse().is_none() {
        return Err(CoreError::NotInvertible { what: "psi" });
    }
    let g = rep.algebra();
    let hyp = check_homomorphism(phi, g, g)?.merge(intertwining_families(phi, psi, rep));
    if let Some(v) = hyp.first() {
        return Err(CoreError::IntertwiningFailure { violation: v.clone() });
    }
    let tc = phi_inv.compose(t)?.compose(psi)?;
    let report = check_embedding_tensor(&tc, rep)?;
    Ok((tc, report))
}
