//! Structure-constant tensors for bilinear and trilinear operations, plus the
//! three module-action tensors that accompany a trilinear bracket.

use num::Zero;

use crate::error::CoreError;
use crate::scalar::{axpy, axpy_sub, one_ref, zeros, Scalar};

/// An argument to a multilinear evaluation: either the `i`-th basis vector
/// (no allocation, coefficient 1) or an explicit coordinate vector.
#[derive(Clone, Copy, Debug)]
pub enum Arg<'a> {
    At(usize),
    Val(&'a [Scalar]),
}

impl<'a> Arg<'a> {
    fn check(&self, dim: usize, what: &'static str) -> Result<(), CoreError> {
        match self {
            Arg::At(i) => {
                if *i >= dim {
                    return Err(CoreError::IndexOutOfRange { index: *i, dims: vec![dim] });
                }
            }
            Arg::Val(v) => {
                if v.len() != dim {
                    return Err(CoreError::DimMismatch { what, expected: dim, got: v.len() });
                }
            }
        }
        Ok(())
    }

    /// The nonzero coordinates of the argument as (index, coefficient) pairs.
    fn terms(&self) -> Vec<(usize, &Scalar)> {
        match self {
            Arg::At(i) => vec![(*i, one_ref())],
            Arg::Val(v) => {
                v.iter().enumerate().filter(|(_, a)| !a.is_zero()).collect()
            }
        }
    }
}

/// Structure constants of a bilinear bracket on an n-dimensional space:
/// `[e_i, e_j] = Σ_k entries[(i·n + j)·n + k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket2 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Bracket2 {
    pub fn zero(dim: usize) -> Self {
        Bracket2 { dim, entries: zeros(dim * dim * dim) }
    }

    pub fn from_entries(
        dim: usize,
        entries: &[([usize; 3], Scalar)],
    ) -> Result<Self, CoreError> {
        let mut b = Bracket2::zero(dim);
        for ([i, j, k], v) in entries {
            for &ix in &[*i, *j, *k] {
                if ix >= dim {
                    return Err(CoreError::IndexOutOfRange {
                        index: ix,
                        dims: vec![dim, dim, dim],
                    });
                }
            }
            b.entries[(i * dim + j) * dim + k] += v;
        }
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.entries[base..base + self.dim]
    }

    pub fn eval(&self, x: Arg, y: Arg) -> Result<Vec<Scalar>, CoreError> {
        x.check(self.dim, "bilinear argument 1")?;
        y.check(self.dim, "bilinear argument 2")?;
        let mut out = zeros(self.dim);
        for (i, a) in x.terms() {
            for (j, b) in &y.terms() {
                let k = a * *b;
                axpy(&mut out, &k, self.fiber(i, *j));
            }
        }
        Ok(out)
    }
}

/// Structure constants of a trilinear bracket on an n-dimensional space:
/// `[e_i, e_j, e_k] = Σ_l entries[((i·n + j)·n + k)·n + l] e_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket3 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Bracket3 {
    pub fn zero(dim: usize) -> Self {
        Bracket3 { dim, entries: zeros(dim * dim * dim * dim) }
    }

    pub fn from_entries(
        dim: usize,
        entries: &[([usize; 4], Scalar)],
    ) -> Result<Self, CoreError> {
        let mut b = Bracket3::zero(dim);
        for ([i, j, k, l], v) in entries {
            for &ix in &[*i, *j, *k, *l] {
                if ix >= dim {
                    return Err(CoreError::IndexOutOfRange {
                        index: ix,
                        dims: vec![dim; 4],
                    });
                }
            }
            b.entries[((i * dim + j) * dim + k) * dim + l] += v;
        }
        Ok(b)
    }

    /// Builds the tensor one basis fiber at a time; `f(i, j, k)` must return
    /// the coordinates of `[e_i, e_j, e_k]`.
    pub fn from_fiber_fn(
        dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vec<Scalar>,
    ) -> Result<Self, CoreError> {
        let mut entries = Vec::with_capacity(dim * dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let fiber = f(i, j, k);
                    if fiber.len() != dim {
                        return Err(CoreError::DimMismatch {
                            what: "bracket fiber length",
                            expected: dim,
                            got: fiber.len(),
                        });
                    }
                    entries.extend(fiber);
                }
            }
        }
        Ok(Bracket3 { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.entries[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }

    /// Coordinates of `[e_i, e_j, e_k]`.
    pub fn fiber(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let base = ((i * self.dim + j) * self.dim + k) * self.dim;
        &self.entries[base..base + self.dim]
    }

    /// The nonzero structure constants as `([i, j, k, l], value)` pairs.
    pub fn nonzero_entries(&self) -> Vec<([usize; 4], Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for (flat, v) in self.entries.iter().enumerate() {
            if !v.is_zero() {
                let l = flat % n;
                let k = flat / n % n;
                let j = flat / (n * n) % n;
                let i = flat / (n * n * n);
                out.push(([i, j, k, l], v.clone()));
            }
        }
        out
    }

    pub fn eval(&self, x: Arg, y: Arg, z: Arg) -> Result<Vec<Scalar>, CoreError> {
        let mut out = zeros(self.dim);
        self.eval_acc(x, y, z, false, &mut out)?;
        Ok(out)
    }

    /// Adds `[x, y, z]` (or subtracts it, with `negate`) into `out`. The
    /// allocation-free form of [`Bracket3::eval`] for defect accumulation in
    /// the identity sweeps.
    pub fn eval_acc(
        &self,
        x: Arg,
        y: Arg,
        z: Arg,
        negate: bool,
        out: &mut [Scalar],
    ) -> Result<(), CoreError> {
        x.check(self.dim, "trilinear argument 1")?;
        y.check(self.dim, "trilinear argument 2")?;
        z.check(self.dim, "trilinear argument 3")?;
        let ys = y.terms();
        let zs = z.terms();
        for (i, a) in x.terms() {
            for (j, b) in &ys {
                let ab = a * *b;
                if ab.is_zero() {
                    continue;
                }
                for (k, c) in &zs {
                    let abc = &ab * *c;
                    let fiber = self.fiber(i, *j, *k);
                    if negate {
                        axpy_sub(out, &abc, fiber);
                    } else {
                        axpy(out, &abc, fiber);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Which slot of a trilinear action the module occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// `(g, g, V) → V`
    Left,
    /// `(g, V, g) → V`
    Middle,
    /// `(V, g, g) → V`
    Right,
}

impl ActionKind {
    /// Dimensions of the three argument slots, in signature order.
    pub fn arg_dims(self, alg_dim: usize, space_dim: usize) -> [usize; 3] {
        match self {
            ActionKind::Left => [alg_dim, alg_dim, space_dim],
            ActionKind::Middle => [alg_dim, space_dim, alg_dim],
            ActionKind::Right => [space_dim, alg_dim, alg_dim],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ActionKind::Left => "left",
            ActionKind::Middle => "middle",
            ActionKind::Right => "right",
        }
    }
}

/// Structure constants of one of the three action maps of a module V over an
/// algebra g. Arguments are stored in signature order; the output lives in V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTensor {
    kind: ActionKind,
    alg_dim: usize,
    space_dim: usize,
    entries: Vec<Scalar>,
}

impl ActionTensor {
    pub fn zero(kind: ActionKind, alg_dim: usize, space_dim: usize) -> Self {
        let [d0, d1, d2] = kind.arg_dims(alg_dim, space_dim);
        ActionTensor { kind, alg_dim, space_dim, entries: zeros(d0 * d1 * d2 * space_dim) }
    }

    pub fn from_entries(
        kind: ActionKind,
        alg_dim: usize,
        space_dim: usize,
        entries: &[([usize; 4], Scalar)],
    ) -> Result<Self, CoreError> {
        let mut t = ActionTensor::zero(kind, alg_dim, space_dim);
        let [d0, d1, d2] = kind.arg_dims(alg_dim, space_dim);
        for ([a, b, c, l], v) in entries {
            let dims = [d0, d1, d2, space_dim];
            for (ix, d) in [*a, *b, *c, *l].into_iter().zip(dims) {
                if ix >= d {
                    return Err(CoreError::IndexOutOfRange {
                        index: ix,
                        dims: dims.to_vec(),
                    });
                }
            }
            t.entries[((a * d1 + b) * d2 + c) * space_dim + l] += v;
        }
        Ok(t)
    }

    /// Builds the tensor one fiber at a time; indices run in signature order
    /// and `f` must return coordinates in the module.
    pub fn from_fiber_fn(
        kind: ActionKind,
        alg_dim: usize,
        space_dim: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vec<Scalar>,
    ) -> Result<Self, CoreError> {
        let [d0, d1, d2] = kind.arg_dims(alg_dim, space_dim);
        let mut entries = Vec::with_capacity(d0 * d1 * d2 * space_dim);
        for a in 0..d0 {
            for b in 0..d1 {
                for c in 0..d2 {
                    let fiber = f(a, b, c);
                    if fiber.len() != space_dim {
                        return Err(CoreError::DimMismatch {
                            what: "action fiber length",
                            expected: space_dim,
                            got: fiber.len(),
                        });
                    }
                    entries.extend(fiber);
                }
            }
        }
        Ok(ActionTensor { kind, alg_dim, space_dim, entries })
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn flat(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Coordinates of the action on the `(a, b, c)` basis triple (signature
    /// order).
    pub fn fiber(&self, a: usize, b: usize, c: usize) -> &[Scalar] {
        let [_, d1, d2] = self.kind.arg_dims(self.alg_dim, self.space_dim);
        let base = ((a * d1 + b) * d2 + c) * self.space_dim;
        &self.entries[base..base + self.space_dim]
    }

    pub fn nonzero_entries(&self) -> Vec<([usize; 4], Scalar)> {
        let [_, d1, d2] = self.kind.arg_dims(self.alg_dim, self.space_dim);
        let m = self.space_dim;
        let mut out = Vec::new();
        for (flat, v) in self.entries.iter().enumerate() {
            if !v.is_zero() {
                let l = flat % m;
                let c = flat / m % d2;
                let b = flat / (m * d2) % d1;
                let a = flat / (m * d2 * d1);
                out.push(([a, b, c, l], v.clone()));
            }
        }
        out
    }

    /// Evaluates the action; arguments are given in signature order.
    pub fn eval(&self, x: Arg, y: Arg, z: Arg) -> Result<Vec<Scalar>, CoreError> {
        let mut out = zeros(self.space_dim);
        self.eval_acc(x, y, z, false, &mut out)?;
        Ok(out)
    }

    /// Adds the action value (or subtracts it, with `negate`) into `out`;
    /// the allocation-free form of [`ActionTensor::eval`].
    pub fn eval_acc(
        &self,
        x: Arg,
        y: Arg,
        z: Arg,
        negate: bool,
        out: &mut [Scalar],
    ) -> Result<(), CoreError> {
        let [d0, d1, d2] = self.kind.arg_dims(self.alg_dim, self.space_dim);
        x.check(d0, "action argument 1")?;
        y.check(d1, "action argument 2")?;
        z.check(d2, "action argument 3")?;
        let ys = y.terms();
        let zs = z.terms();
        for (a, ca) in x.terms() {
            for (b, cb) in &ys {
                let cab = ca * *cb;
                if cab.is_zero() {
                    continue;
                }
                for (c, cc) in &zs {
                    let k = &cab * *cc;
                    let fiber = self.fiber(a, *b, *c);
                    if negate {
                        axpy_sub(out, &k, fiber);
                    } else {
                        axpy(out, &k, fiber);
                    }
                }
            }
        }
        Ok(())
    }
}
