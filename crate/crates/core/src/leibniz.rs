//! Trilinear Leibniz algebras: the fundamental identity, representations,
//! semidirect products, homomorphisms, and the bridge to binary Leibniz
//! algebras.

use crate::error::CoreError;
use crate::matrix::LinMap;
use crate::report::CheckReport;
use crate::scalar::{one_ref, sub_assign, zeros, Scalar};
use crate::subspace::Subspace;
use crate::sweep::scan_family;
use crate::tensor::{ActionKind, ActionTensor, Arg, Bracket2, Bracket3};

/// Checks the fundamental identity
/// `[a,b,[x,y,z]] = [[a,b,x],y,z] + [x,[a,b,y],z] + [x,y,[a,b,z]]`
/// on every basis 5-tuple `(a,b,x,y,z)`.
pub fn check_fundamental_identity(bracket: &Bracket3) -> CheckReport {
    let n = bracket.dim();
    scan_family("leibniz3/fundamental", &[n; 5], |t| {
        let [a, b, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = zeros(n);
        bracket
            .eval_acc(Arg::At(a), Arg::At(b), Arg::Val(bracket.fiber(x, y, z)), false, &mut d)
            .expect("basis indices in range");
        bracket.eval_acc(Arg::Val(bracket.fiber(a, b, x)), Arg::At(y), Arg::At(z), true, &mut d).unwrap();
        bracket.eval_acc(Arg::At(x), Arg::Val(bracket.fiber(a, b, y)), Arg::At(z), true, &mut d).unwrap();
        bracket.eval_acc(Arg::At(x), Arg::At(y), Arg::Val(bracket.fiber(a, b, z)), true, &mut d).unwrap();
        d
    })
}

/// A module `V` over a trilinear algebra, given by the three action tensors
/// `left : (g,g,V)→V`, `middle : (g,V,g)→V`, `right : (V,g,g)→V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Bracket3,
    left: ActionTensor,
    middle: ActionTensor,
    right: ActionTensor,
}

impl Representation {
    pub fn new(
        algebra: Bracket3,
        left: ActionTensor,
        middle: ActionTensor,
        right: ActionTensor,
    ) -> Result<Self, CoreError> {
        let n = algebra.dim();
        let m = left.space_dim();
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
                    what: "action algebra dimension",
                    expected: n,
                    got: t.alg_dim(),
                });
            }
            if t.space_dim() != m {
                return Err(CoreError::DimMismatch {
                    what: "action module dimension",
                    expected: m,
                    got: t.space_dim(),
                });
            }
        }
        Ok(Representation { algebra, left, middle, right })
    }

    /// The adjoint module: `V = g` with every action given by the bracket
    /// itself. All three tensors store their arguments in signature order, so
    /// each is the bracket tensor verbatim.
    pub fn adjoint(algebra: &Bracket3) -> Self {
        let n = algebra.dim();
        let flat = algebra.flat();
        let tensor = |kind| {
            ActionTensor::from_fiber_fn(kind, n, n, |a, b, c| {
                let base = ((a * n + b) * n + c) * n;
                flat[base..base + n].to_vec()
            })
            .expect("fibers have algebra dimension")
        };
        Representation {
            algebra: algebra.clone(),
            left: tensor(ActionKind::Left),
            middle: tensor(ActionKind::Middle),
            right: tensor(ActionKind::Right),
        }
    }

    /// The zero module structure on a `space_dim`-dimensional space.
    pub fn zero_on(algebra: &Bracket3, space_dim: usize) -> Self {
        let n = algebra.dim();
        Representation {
            algebra: algebra.clone(),
            left: ActionTensor::zero(ActionKind::Left, n, space_dim),
            middle: ActionTensor::zero(ActionKind::Middle, n, space_dim),
            right: ActionTensor::zero(ActionKind::Right, n, space_dim),
        }
    }

    pub fn algebra(&self) -> &Bracket3 {
        &self.algebra
    }

    pub fn alg_dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn space_dim(&self) -> usize {
        self.left.space_dim()
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

/// Checks the five compatibility axioms between a candidate module structure
/// and the bracket of its algebra. Families are reported under
/// `rep/l-l`, `rep/l-m`, `rep/l-r`, `rep/m-bracket`, `rep/r-bracket`, in that
/// order; within each family tuples follow the identity's own argument order.
pub fn check_representation(rep: &Representation) -> CheckReport {
    let g = &rep.algebra;
    let (l, m, r) = (&rep.left, &rep.middle, &rep.right);
    let n = rep.alg_dim();
    let mv = rep.space_dim();

    // l(a,b,l(x,y,u)) = l([a,b,x],y,u) + l(x,[a,b,y],u) + l(x,y,l(a,b,u))
    let ll = scan_family("rep/l-l", &[n, n, n, n, mv], |t| {
        let [a, b, x, y, u] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = l.eval(Arg::At(a), Arg::At(b), Arg::Val(l.fiber(x, y, u))).unwrap();
        sub_assign(&mut d, &l.eval(Arg::Val(g.fiber(a, b, x)), Arg::At(y), Arg::At(u)).unwrap());
        sub_assign(&mut d, &l.eval(Arg::At(x), Arg::Val(g.fiber(a, b, y)), Arg::At(u)).unwrap());
        sub_assign(&mut d, &l.eval(Arg::At(x), Arg::At(y), Arg::Val(l.fiber(a, b, u))).unwrap());
        d
    });

    // l(a,b,m(x,u,z)) = m([a,b,x],u,z) + m(x,l(a,b,u),z) + m(x,u,[a,b,z])
    let lm = scan_family("rep/l-m", &[n, n, n, mv, n], |t| {
        let [a, b, x, u, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = l.eval(Arg::At(a), Arg::At(b), Arg::Val(m.fiber(x, u, z))).unwrap();
        sub_assign(&mut d, &m.eval(Arg::Val(g.fiber(a, b, x)), Arg::At(u), Arg::At(z)).unwrap());
        sub_assign(&mut d, &m.eval(Arg::At(x), Arg::Val(l.fiber(a, b, u)), Arg::At(z)).unwrap());
        sub_assign(&mut d, &m.eval(Arg::At(x), Arg::At(u), Arg::Val(g.fiber(a, b, z))).unwrap());
        d
    });

    // l(a,b,r(u,y,z)) = r(l(a,b,u),y,z) + r(u,[a,b,y],z) + r(u,y,[a,b,z])
    let lr = scan_family("rep/l-r", &[n, n, mv, n, n], |t| {
        let [a, b, u, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = l.eval(Arg::At(a), Arg::At(b), Arg::Val(r.fiber(u, y, z))).unwrap();
        sub_assign(&mut d, &r.eval(Arg::Val(l.fiber(a, b, u)), Arg::At(y), Arg::At(z)).unwrap());
        sub_assign(&mut d, &r.eval(Arg::At(u), Arg::Val(g.fiber(a, b, y)), Arg::At(z)).unwrap());
        sub_assign(&mut d, &r.eval(Arg::At(u), Arg::At(y), Arg::Val(g.fiber(a, b, z))).unwrap());
        d
    });

    // m(a,u,[x,y,z]) = r(m(a,u,x),y,z) + m(x,m(a,u,y),z) + l(x,y,m(a,u,z))
    let mb = scan_family("rep/m-bracket", &[n, mv, n, n, n], |t| {
        let [a, u, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = m.eval(Arg::At(a), Arg::At(u), Arg::Val(g.fiber(x, y, z))).unwrap();
        sub_assign(&mut d, &r.eval(Arg::Val(m.fiber(a, u, x)), Arg::At(y), Arg::At(z)).unwrap());
        sub_assign(&mut d, &m.eval(Arg::At(x), Arg::Val(m.fiber(a, u, y)), Arg::At(z)).unwrap());
        sub_assign(&mut d, &l.eval(Arg::At(x), Arg::At(y), Arg::Val(m.fiber(a, u, z))).unwrap());
        d
    });

    // r(u,b,[x,y,z]) = r(r(u,b,x),y,z) + m(x,r(u,b,y),z) + l(x,y,r(u,b,z))
    let rb = scan_family("rep/r-bracket", &[mv, n, n, n, n], |t| {
        let [u, b, x, y, z] = [t[0], t[1], t[2], t[3], t[4]];
        let mut d = r.eval(Arg::At(u), Arg::At(b), Arg::Val(g.fiber(x, y, z))).unwrap();
        sub_assign(&mut d, &r.eval(Arg::Val(r.fiber(u, b, x)), Arg::At(y), Arg::At(z)).unwrap());
        sub_assign(&mut d, &m.eval(Arg::At(x), Arg::Val(r.fiber(u, b, y)), Arg::At(z)).unwrap());
        sub_assign(&mut d, &l.eval(Arg::At(x), Arg::At(y), Arg::Val(r.fiber(u, b, z))).unwrap());
        d
    });

    ll.merge(lm).merge(lr).merge(mb).merge(rb)
}

/// The semidirect-product bracket on `g ⊕ V`:
/// `[(x,u),(y,v),(z,w)] = ([x,y,z], l(x,y,w) + m(x,v,z) + r(u,y,z))`.
/// This is a trilinear Leibniz algebra exactly when the module axioms hold.
pub fn semidirect_sum(rep: &Representation) -> Bracket3 {
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
    Bracket3::from_fiber_fn(total, |p, q, s| {
        match (p < n, q < n, s < n) {
            (true, true, true) => embed_alg(rep.algebra.fiber(p, q, s)),
            (true, true, false) => embed_mod(rep.left.fiber(p, q, s - n)),
            (true, false, true) => embed_mod(rep.middle.fiber(p, q - n, s)),
            (false, true, true) => embed_mod(rep.right.fiber(p - n, q, s)),
            _ => zeros(total),
        }
    })
    .expect("fibers constructed at full dimension")
}

/// Checks that `phi : src → dst` intertwines the brackets:
/// `phi([x,y,z]) = [phi(x), phi(y), phi(z)]` on every basis triple.
pub fn check_homomorphism(
    phi: &crate::matrix::LinMap,
    src: &Bracket3,
    dst: &Bracket3,
) -> Result<CheckReport, CoreError> {
    let n = src.dim();
    if phi.cols() != n {
        return Err(CoreError::DimMismatch { what: "homomorphism domain", expected: n, got: phi.cols() });
    }
    if phi.rows() != dst.dim() {
        return Err(CoreError::DimMismatch {
            what: "homomorphism codomain",
            expected: dst.dim(),
            got: phi.rows(),
        });
    }
    let images: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..phi.rows()).map(|r| phi.get(r, i).clone()).collect())
        .collect();
    Ok(scan_family("hom/bracket", &[n; 3], |t| {
        let [x, y, z] = [t[0], t[1], t[2]];
        let mut d = phi.apply(src.fiber(x, y, z)).unwrap();
        let rhs = dst
            .eval(Arg::Val(&images[x]), Arg::Val(&images[y]), Arg::Val(&images[z]))
            .unwrap();
        sub_assign(&mut d, &rhs);
        d
    }))
}

/// The adjoint module of an algebra: the algebra acting on itself, all three
/// action tensors given by the bracket. Valid whenever the algebra satisfies
/// the fundamental identity.
pub fn adjoint_rep(algebra: &Bracket3) -> Representation {
    Representation::adjoint(algebra)
}

/// Checks that a subspace is closed under the bracket, i.e. `[S,S,S] ⊆ S`,
/// on all triples of canonical basis vectors of `S`. Defects are reported in
/// ambient coordinates, reduced modulo `S`.
pub fn check_subalgebra(sub: &Subspace, algebra: &Bracket3) -> Result<CheckReport, CoreError> {
    let n = algebra.dim();
    if sub.ambient() != n {
        return Err(CoreError::AmbientMismatch(n, sub.ambient()));
    }
    let rows = sub.basis_rows();
    Ok(scan_family("subalg/closure", &[rows.len(); 3], |t| {
        let v = algebra
            .eval(Arg::Val(&rows[t[0]]), Arg::Val(&rows[t[1]]), Arg::Val(&rows[t[2]]))
            .unwrap();
        sub.reduce(&v).unwrap()
    }))
}

/// Checks that a subspace absorbs the bracket in every slot:
/// `[I,g,g] + [g,I,g] + [g,g,I] ⊆ I`. Families are reported as
/// `ideal/first-slot`, `ideal/middle-slot`, `ideal/last-slot`; in each tuple
/// the ideal argument is indexed by canonical basis row, the others by the
/// ambient standard basis.
pub fn check_ideal(ideal: &Subspace, algebra: &Bracket3) -> Result<CheckReport, CoreError> {
    let n = algebra.dim();
    if ideal.ambient() != n {
        return Err(CoreError::AmbientMismatch(n, ideal.ambient()));
    }
    let rows = ideal.basis_rows();
    let k = rows.len();
    let first = scan_family("ideal/first-slot", &[k, n, n], |t| {
        let v = algebra.eval(Arg::Val(&rows[t[0]]), Arg::At(t[1]), Arg::At(t[2])).unwrap();
        ideal.reduce(&v).unwrap()
    });
    let middle = scan_family("ideal/middle-slot", &[n, k, n], |t| {
        let v = algebra.eval(Arg::At(t[0]), Arg::Val(&rows[t[1]]), Arg::At(t[2])).unwrap();
        ideal.reduce(&v).unwrap()
    });
    let last = scan_family("ideal/last-slot", &[n, n, k], |t| {
        let v = algebra.eval(Arg::At(t[0]), Arg::At(t[1]), Arg::Val(&rows[t[2]])).unwrap();
        ideal.reduce(&v).unwrap()
    });
    Ok(first.merge(middle).merge(last))
}

/// The quotient algebra by an ideal, together with the projection onto it.
///
/// The pivot columns of the ideal's canonical basis are eliminated; the
/// surviving standard coordinates, in increasing order, index the quotient.
/// The projection sends a vector to its reduction modulo the ideal restricted
/// to the surviving coordinates; it is surjective and intertwines the
/// brackets. Fails with `NotAnIdeal` when the subspace does not absorb the
/// bracket.
pub fn quotient(algebra: &Bracket3, ideal: &Subspace) -> Result<(Bracket3, LinMap), CoreError> {
    let report = check_ideal(ideal, algebra)?;
    if let Some(v) = report.first() {
        return Err(CoreError::NotAnIdeal { violation: v.clone() });
    }
    let n = algebra.dim();
    let pivots = ideal.pivot_columns();
    let survivors: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let q = survivors.len();

    let reduced_basis: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let mut e = zeros(n);
            e[j] = one_ref().clone();
            ideal.reduce(&e).unwrap()
        })
        .collect();
    let project = LinMap::from_fn(q, n, |r, c| reduced_basis[c][survivors[r]].clone());

    let bracket = Bracket3::from_fiber_fn(q, |i, j, k| {
        project
            .apply(algebra.fiber(survivors[i], survivors[j], survivors[k]))
            .unwrap()
    })
    .expect("projected fibers have quotient dimension");
    Ok((bracket, project))
}

/// Checks the (left) Leibniz identity `[x,[y,z]] = [[x,y],z] + [y,[x,z]]` for
/// a bilinear bracket.
pub fn check_leibniz(bracket: &Bracket2) -> CheckReport {
    let n = bracket.dim();
    scan_family("leibniz2/left", &[n; 3], |t| {
        let [x, y, z] = [t[0], t[1], t[2]];
        let mut d = bracket.eval(Arg::At(x), Arg::Val(bracket.fiber(y, z))).unwrap();
        sub_assign(&mut d, &bracket.eval(Arg::Val(bracket.fiber(x, y)), Arg::At(z)).unwrap());
        sub_assign(&mut d, &bracket.eval(Arg::At(y), Arg::Val(bracket.fiber(x, z))).unwrap());
        d
    })
}

/// The trilinear bracket `[x,y,z] = [[x,y],z]` induced by a bilinear one.
/// When the input satisfies the Leibniz identity the output satisfies the
/// fundamental identity.
pub fn three_from_binary(bracket: &Bracket2) -> Bracket3 {
    let n = bracket.dim();
    Bracket3::from_fiber_fn(n, |i, j, k| {
        bracket.eval(Arg::Val(bracket.fiber(i, j)), Arg::At(k)).unwrap()
    })
    .expect("fibers have algebra dimension")
}

/// The bilinear bracket on the tensor square `g ⊗ g` of a trilinear algebra:
/// `[x1⊗x2, y1⊗y2] = [x1,x2,y1]⊗y2 + y1⊗[x1,x2,y2]`, with `e_i ⊗ e_j`
/// flattened to index `i·n + j`. When the input satisfies the fundamental
/// identity this bracket satisfies the Leibniz identity.
pub fn binary_on_tensor_square(bracket: &Bracket3) -> Bracket2 {
    let n = bracket.dim();
    let nn = n * n;
    let mut entries = Vec::new();
    for x1 in 0..n {
        for x2 in 0..n {
            let xx = x1 * n + x2;
            for y1 in 0..n {
                for y2 in 0..n {
                    let yy = y1 * n + y2;
                    for (l, c) in bracket.fiber(x1, x2, y1).iter().enumerate() {
                        if !num::Zero::is_zero(c) {
                            entries.push(([xx, yy, l * n + y2], c.clone()));
                        }
                    }
                    for (l, c) in bracket.fiber(x1, x2, y2).iter().enumerate() {
                        if !num::Zero::is_zero(c) {
                            entries.push(([xx, yy, y1 * n + l], c.clone()));
                        }
                    }
                }
            }
        }
    }
    Bracket2::from_entries(nn, &entries).expect("indices below n^2 by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::scalar::int;

    #[test]
    fn levi_civita_algebra_satisfies_fundamental_identity() {
        let report = check_fundamental_identity(&samples::vp4());
        assert!(report.passed());
        assert_eq!(report.checked, 4usize.pow(5));
    }

    #[test]
    fn nilpotent_and_abelian_algebras_satisfy_fundamental_identity() {
        assert!(check_fundamental_identity(&samples::n2()).passed());
        assert!(check_fundamental_identity(&samples::abelian(3)).passed());
        assert!(check_fundamental_identity(&samples::abelian(0)).passed());
    }

    #[test]
    fn idempotent_line_fails_fundamental_identity() {
        // [e,e,e] = e gives [e,e,[e,e,e]] = e but three right-hand terms sum
        // to 3e; the defect at (0,0,0,0,0) is -2e.
        let b = Bracket3::from_entries(1, &[([0, 0, 0, 0], int(1))]).unwrap();
        let report = check_fundamental_identity(&b);
        assert_eq!(report.total_violations, 1);
        let v = report.first().unwrap();
        assert_eq!(v.identity, "leibniz3/fundamental");
        assert_eq!(v.tuple, vec![0, 0, 0, 0, 0]);
        assert_eq!(v.defect, vec![int(-2)]);
    }

    #[test]
    fn perturbing_a_low_slot_entry_breaks_the_fundamental_identity() {
        // [e0,e0,e0] = e1 plus [e1,e0,e0] = e0. Cross-checked against an
        // independent brute-force enumeration: exactly four violating tuples.
        let b = Bracket3::from_entries(2, &[([0, 0, 0, 1], int(1)), ([1, 0, 0, 0], int(1))])
            .unwrap();
        let report = check_fundamental_identity(&b);
        assert_eq!(report.total_violations, 4);
        let got: Vec<(Vec<usize>, Vec<Scalar>)> = report
            .violations
            .iter()
            .map(|v| (v.tuple.clone(), v.defect.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec![0, 0, 0, 0, 0], vec![int(-1), int(0)]),
                (vec![0, 0, 1, 0, 0], vec![int(0), int(1)]),
                (vec![1, 0, 0, 0, 0], vec![int(0), int(-3)]),
                (vec![1, 0, 1, 0, 0], vec![int(-1), int(0)]),
            ]
        );
    }

    #[test]
    fn absorbing_output_line_is_an_ideal_of_the_nilpotent_algebra() {
        let alg = samples::n2();
        let line = Subspace::from_rows(2, &[vec![int(0), int(1)]]).unwrap();
        assert!(check_ideal(&line, &alg).unwrap().passed());
        assert!(check_subalgebra(&line, &alg).unwrap().passed());
    }

    #[test]
    fn generator_line_is_not_a_subalgebra_of_the_nilpotent_algebra() {
        // [e0,e0,e0] = e1 escapes span(e0); the reduced defect is e1.
        let alg = samples::n2();
        let line = Subspace::from_rows(2, &[vec![int(1), int(0)]]).unwrap();
        let report = check_subalgebra(&line, &alg).unwrap();
        let v = report.first().expect("closure must fail");
        assert_eq!(v.identity, "subalg/closure");
        assert_eq!(v.tuple, vec![0, 0, 0]);
        assert_eq!(v.defect, vec![int(0), int(1)]);
    }

    #[test]
    fn coordinate_plane_is_a_subalgebra_but_not_an_ideal() {
        // In the Levi-Civita algebra every bracket with a repeated argument
        // vanishes, so span(e0,e3) is closed; but [e0,e3,e1] = e2 escapes it.
        let alg = samples::vp4();
        let plane = Subspace::from_rows(
            4,
            &[vec![int(1), int(0), int(0), int(0)], vec![int(0), int(0), int(0), int(1)]],
        )
        .unwrap();
        assert!(check_subalgebra(&plane, &alg).unwrap().passed());
        let report = check_ideal(&plane, &alg).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn full_and_zero_subspaces_are_always_ideals() {
        let alg = samples::vp4();
        assert!(check_ideal(&Subspace::full(4), &alg).unwrap().passed());
        assert!(check_ideal(&Subspace::zero(4), &alg).unwrap().passed());
    }

    #[test]
    fn mismatched_ambient_dimension_is_rejected() {
        let alg = samples::n2();
        let sub = Subspace::zero(3);
        assert!(matches!(
            check_ideal(&sub, &alg),
            Err(CoreError::AmbientMismatch(2, 3))
        ));
        assert!(matches!(
            check_subalgebra(&sub, &alg),
            Err(CoreError::AmbientMismatch(2, 3))
        ));
    }

    #[test]
    fn quotient_by_the_output_line_is_the_abelian_line() {
        let alg = samples::n2();
        let line = Subspace::from_rows(2, &[vec![int(0), int(1)]]).unwrap();
        let (quot, project) = quotient(&alg, &line).unwrap();
        assert_eq!(quot.dim(), 1);
        assert!(quot.is_zero());
        assert_eq!(project, LinMap::from_int_rows(2, &[&[1, 0]]));
        assert!(check_homomorphism(&project, &alg, &quot).unwrap().passed());
    }

    #[test]
    fn quotient_by_zero_subspace_is_the_algebra_itself() {
        let alg = samples::vp4();
        let (quot, project) = quotient(&alg, &Subspace::zero(4)).unwrap();
        assert_eq!(quot.flat(), alg.flat());
        assert_eq!(project, LinMap::identity(4));
    }

    #[test]
    fn quotient_by_full_space_is_zero_dimensional() {
        let (quot, project) = quotient(&samples::vp4(), &Subspace::full(4)).unwrap();
        assert_eq!(quot.dim(), 0);
        assert_eq!(project.rows(), 0);
        assert!(check_fundamental_identity(&quot).passed());
    }

    #[test]
    fn quotient_by_a_non_ideal_is_rejected_with_the_witness() {
        let alg = samples::n2();
        let line = Subspace::from_rows(2, &[vec![int(1), int(0)]]).unwrap();
        match quotient(&alg, &line) {
            Err(CoreError::NotAnIdeal { violation }) => {
                assert_eq!(violation.identity, "ideal/first-slot");
                assert_eq!(violation.tuple, vec![0, 0, 0]);
            }
            other => panic!("expected NotAnIdeal, got {other:?}"),
        }
    }

    #[test]
    fn quotient_off_pivot_coordinates_fold_back_correctly() {
        // Ideal spanned by e0 + e1 inside the abelian algebra: coordinate 0
        // is the pivot, so the class of e0 folds back to -e1.
        let alg = samples::abelian(2);
        let diag = Subspace::from_rows(2, &[vec![int(1), int(1)]]).unwrap();
        let (quot, project) = quotient(&alg, &diag).unwrap();
        assert_eq!(quot.dim(), 1);
        assert_eq!(project, LinMap::from_int_rows(2, &[&[-1, 1]]));
        assert!(crate::scalar::is_zero_vec(
            &project.apply(&[int(1), int(1)]).unwrap()
        ));
    }

    #[test]
    fn adjoint_module_satisfies_all_five_axioms() {
        for alg in [samples::vp4(), samples::n2()] {
            let report = check_representation(&Representation::adjoint(&alg));
            assert!(report.passed(), "adjoint axioms failed:\n{report}");
        }
    }

    #[test]
    fn adjoint_tensors_are_the_bracket_tensor() {
        let alg = samples::vp4();
        let rep = Representation::adjoint(&alg);
        assert_eq!(rep.left().flat(), alg.flat());
        assert_eq!(rep.middle().flat(), alg.flat());
        assert_eq!(rep.right().flat(), alg.flat());
    }

    #[test]
    fn zeroing_the_middle_action_breaks_exactly_one_family() {
        // Worked by hand on the Levi-Civita algebra: with m = 0 the family
        // r(u,b,[x,y,z]) = r(r(u,b,x),y,z) + m(x,r(u,b,y),z) + l(x,y,r(u,b,z))
        // loses the term [x,[u,b,y],z]; the first offending tuple in
        // (u,b,x,y,z) order is (0,1,0,2,1) with defect [e0,e3,e1] = +e2.
        let alg = samples::vp4();
        let adj = Representation::adjoint(&alg);
        let broken = Representation::new(
            alg.clone(),
            adj.left().clone(),
            ActionTensor::zero(ActionKind::Middle, 4, 4),
            adj.right().clone(),
        )
        .unwrap();
        let report = check_representation(&broken);
        assert!(!report.passed());
        let v = report.first().unwrap();
        assert_eq!(v.identity, "rep/r-bracket");
        assert_eq!(v.tuple, vec![0, 1, 0, 2, 1]);
        assert_eq!(v.defect, vec![int(0), int(0), int(1), int(0)]);
    }

    #[test]
    fn zero_module_is_always_a_representation() {
        let report = check_representation(&Representation::zero_on(&samples::vp4(), 3));
        assert!(report.passed());
    }

    #[test]
    fn semidirect_of_nilpotent_adjoint_has_expected_constants() {
        // g ⋉ g for [e0,e0,e0] = e1: the only products are the original one
        // and its three single-module-slot copies landing in the module part.
        let alg = samples::n2();
        let sd = semidirect_sum(&Representation::adjoint(&alg));
        assert_eq!(sd.dim(), 4);
        assert_eq!(
            sd.nonzero_entries(),
            vec![
                ([0, 0, 0, 1], int(1)),
                ([0, 0, 2, 3], int(1)),
                ([0, 2, 0, 3], int(1)),
                ([2, 0, 0, 3], int(1)),
            ]
        );
        assert!(check_fundamental_identity(&sd).passed());
    }

    #[test]
    fn semidirect_of_levi_civita_adjoint_is_a_3leibniz_algebra() {
        let sd = semidirect_sum(&Representation::adjoint(&samples::vp4()));
        assert_eq!(sd.dim(), 8);
        assert!(check_fundamental_identity(&sd).passed());
    }

    #[test]
    fn unipotent_map_is_an_automorphism_of_the_nilpotent_algebra() {
        let alg = samples::n2();
        let phi = crate::matrix::LinMap::from_int_rows(2, &[&[1, 0], &[1, 1]]);
        let report = check_homomorphism(&phi, &alg, &alg).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn swap_map_is_not_a_homomorphism_of_the_nilpotent_algebra() {
        // phi(e0) = e1, phi(e1) = e0: phi([e0,e0,e0]) = e0 but
        // [e1,e1,e1] = 0, so the defect at (0,0,0) is e0.
        let alg = samples::n2();
        let phi = crate::matrix::LinMap::from_int_rows(2, &[&[0, 1], &[1, 0]]);
        let report = check_homomorphism(&phi, &alg, &alg).unwrap();
        let v = report.first().expect("swap is not a homomorphism");
        assert_eq!(v.identity, "hom/bracket");
        assert_eq!(v.tuple, vec![0, 0, 0]);
        assert_eq!(v.defect, vec![int(1), int(0)]);
    }

    #[test]
    fn binary_fixtures_satisfy_or_fail_the_leibniz_identity() {
        assert!(check_leibniz(&samples::nilpotent_lie2()).passed());
        assert!(check_leibniz(&samples::nonabelian_lie2()).passed());
        // [e,e] = e is not Leibniz: [e,[e,e]] = e, the right side gives 2e.
        let idem = Bracket2::from_entries(1, &[([0, 0, 0], int(1))]).unwrap();
        let report = check_leibniz(&idem);
        let v = report.first().unwrap();
        assert_eq!(v.defect, vec![int(-1)]);
    }

    #[test]
    fn derived_trilinear_bracket_of_binary_fixtures() {
        // [x,y,z] = [[x,y],z]. For [e0,e0] = e1 every iterate dies; for the
        // nonabelian Lie algebra [e0,e1] = e1 two constants survive.
        assert!(three_from_binary(&samples::nilpotent_lie2()).is_zero());

        let t = three_from_binary(&samples::nonabelian_lie2());
        assert_eq!(
            t.nonzero_entries(),
            vec![([0, 1, 0, 1], int(-1)), ([1, 0, 0, 1], int(1))]
        );
        assert!(check_fundamental_identity(&t).passed());
    }

    #[test]
    fn tensor_square_of_nilpotent_algebra_matches_hand_expansion() {
        let b2 = binary_on_tensor_square(&samples::n2());
        assert_eq!(b2.dim(), 4);
        let mut nonzero = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    if !num::Zero::is_zero(b2.coeff(i, j, k)) {
                        nonzero.push(([i, j, k], b2.coeff(i, j, k).clone()));
                    }
                }
            }
        }
        assert_eq!(
            nonzero,
            vec![
                ([0, 0, 1], int(1)),
                ([0, 0, 2], int(1)),
                ([0, 1, 3], int(1)),
                ([0, 2, 3], int(1)),
            ]
        );
        assert!(check_leibniz(&b2).passed());
    }

    #[test]
    fn tensor_square_of_levi_civita_algebra_is_leibniz() {
        assert!(check_leibniz(&binary_on_tensor_square(&samples::vp4())).passed());
    }
}
