//! Small exactly-known algebras, modules and operators used across the test
//! suites and the bundled data set. Every numeric value here was worked out
//! by hand.

use num::Zero;

use crate::dialgebra::Action;
use crate::matrix::LinMap;
use crate::scalar::{int, Scalar};
use crate::leibniz::Representation;
use crate::tensor::{ActionKind, ActionTensor, Bracket2, Bracket3};

/// The zero bracket on an n-dimensional space.
pub fn abelian(n: usize) -> Bracket3 {
    Bracket3::zero(n)
}

/// Sign of `perm` as a permutation of `0..4`, or 0 on repeats.
fn levi_civita(perm: [usize; 4]) -> i64 {
    for a in 0..4 {
        for b in a + 1..4 {
            if perm[a] == perm[b] {
                return 0;
            }
        }
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The four-dimensional algebra with totally antisymmetric structure
/// constants `[e_i, e_j, e_k] = Σ_l ε_{ijkl} e_l` (so `[e0,e1,e2] = e3` and
/// 23 more signed products).
pub fn vp4() -> Bracket3 {
    let mut entries = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let s = levi_civita([i, j, k, l]);
                    if s != 0 {
                        entries.push(([i, j, k, l], int(s)));
                    }
                }
            }
        }
    }
    Bracket3::from_entries(4, &entries).expect("indices below 4")
}

/// The two-dimensional nilpotent algebra with a single product
/// `[e0,e0,e0] = e1`.
pub fn n2() -> Bracket3 {
    Bracket3::from_entries(2, &[([0, 0, 0, 1], int(1))]).expect("indices below 2")
}

/// The two-dimensional bilinear bracket `[e0,e0] = e1` (nilpotent, Leibniz
/// but not antisymmetric).
pub fn nilpotent_lie2() -> Bracket2 {
    Bracket2::from_entries(2, &[([0, 0, 1], int(1))]).expect("indices below 2")
}

/// The nonabelian two-dimensional Lie algebra `[e0,e1] = e1 = -[e1,e0]`.
pub fn nonabelian_lie2() -> Bracket2 {
    Bracket2::from_entries(2, &[([0, 1, 1], int(1)), ([1, 0, 1], int(-1))])
        .expect("indices below 2")
}

/// The square-zero derivation `d(e0) = e1`, `d(e1) = 0` of [`n2`] (and of
/// the ternary algebra derived from [`nonabelian_lie2`]).
pub fn shift_differential() -> LinMap {
    LinMap::from_int_rows(2, &[&[0, 0], &[1, 0]])
}

/// The projection `T(e0) = 0`, `T(e1) = e1` onto the line spanned by `e1`.
/// On the adjoint module of [`n2`] this is an averaging operator that is not
/// an algebra endomorphism.
pub fn shift_operator() -> LinMap {
    LinMap::from_int_rows(2, &[&[0, 0], &[0, 1]])
}

/// The module `V = g ⊕ … ⊕ g` (`k` copies) with all three actions applied
/// component-wise; basis vector `c·n + i` is `e_i` in copy `c`.
pub fn copies_rep(algebra: &Bracket3, k: usize) -> Representation {
    let n = algebra.dim();
    let m = n * k;
    let place = |copy: usize, fiber: &[Scalar]| {
        let mut v = crate::scalar::zeros(m);
        v[copy * n..(copy + 1) * n].clone_from_slice(fiber);
        v
    };
    let left = ActionTensor::from_fiber_fn(ActionKind::Left, n, m, |a, b, u| {
        place(u / n, algebra.fiber(a, b, u % n))
    })
    .expect("fiber length m");
    let middle = ActionTensor::from_fiber_fn(ActionKind::Middle, n, m, |a, u, b| {
        place(u / n, algebra.fiber(a, u % n, b))
    })
    .expect("fiber length m");
    let right = ActionTensor::from_fiber_fn(ActionKind::Right, n, m, |u, a, b| {
        place(u / n, algebra.fiber(u % n, a, b))
    })
    .expect("fiber length m");
    Representation::new(algebra.clone(), left, middle, right).expect("shapes agree")
}

/// The weighted-sum map `g^k → g`, `(u_1, …, u_k) ↦ Σ_c w_c u_c`, matching
/// the basis layout of [`copies_rep`].
pub fn weighted_sum_map(n: usize, weights: &[i64]) -> LinMap {
    let k = weights.len();
    LinMap::from_fn(n, n * k, |r, c| {
        if c % n == r {
            int(weights[c / n])
        } else {
            Scalar::zero()
        }
    })
}

/// An algebra acting on itself: base and target share the bracket and all
/// three tensors are the bracket read in signature order. Valid for abelian
/// and two-step nilpotent brackets, but not in general.
pub fn self_action(algebra: &Bracket3) -> Action {
    let rep = Representation::adjoint(algebra);
    Action::new(
        algebra.clone(),
        algebra.clone(),
        rep.left().clone(),
        rep.middle().clone(),
        rep.right().clone(),
    )
    .expect("adjoint tensors match the algebra")
}

/// The semidirect extension `g ⋉ V` acting on its abelian ideal `V` by
/// restricting its own bracket, paired with the inclusion `V → g ⋉ V`.
/// The inclusion is equivariant and Peiffer-trivial by construction, giving
/// a crossed module whenever the representation is valid.
pub fn extension_action(rep: &Representation) -> (Action, LinMap) {
    let n = rep.alg_dim();
    let m = rep.space_dim();
    let big = crate::leibniz::semidirect_sum(rep);
    let total = n + m;
    let incl = LinMap::from_fn(total, m, |r, c| {
        if r >= n && r - n == c {
            crate::scalar::one_ref().clone()
        } else {
            Scalar::zero()
        }
    });
    let fiber_part = |i: usize, j: usize, k: usize| big.fiber(i, j, k)[n..].to_vec();
    let left = ActionTensor::from_fiber_fn(ActionKind::Left, total, m, |x, y, u| {
        fiber_part(x, y, n + u)
    })
    .expect("fiber length m");
    let middle = ActionTensor::from_fiber_fn(ActionKind::Middle, total, m, |x, u, y| {
        fiber_part(x, n + u, y)
    })
    .expect("fiber length m");
    let right = ActionTensor::from_fiber_fn(ActionKind::Right, total, m, |u, x, y| {
        fiber_part(n + u, x, y)
    })
    .expect("fiber length m");
    let act = Action::new(big, Bracket3::zero(m), left, middle, right).expect("shapes agree");
    (act, incl)
}
