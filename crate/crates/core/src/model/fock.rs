//! Occupation-number spaces for a finite list of fermionic modes.
//!
//! Bit `i` of a basis index is the occupation of mode `i`. A basis state is
//! `c†_{i1} c†_{i2} … |0⟩` with `i1 < i2 < …`, so moving an operator onto
//! mode `i` picks up `(−1)^(occupied modes below i)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{inner, vec_norm, ComplexMatrix};

/// Largest mode count for which dense Fock matrices are built.
pub const MAX_FOCK_MODES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Create(usize),
    Annihilate(usize),
}

/// `coeff · ops[0] ops[1] … ops[n−1]`, the rightmost operator acting first.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub ops: Vec<Op>,
}

impl Term {
    pub fn new(coeff: Complex64, ops: Vec<Op>) -> Self {
        Self { coeff, ops }
    }

    pub fn real(coeff: f64, ops: Vec<Op>) -> Self {
        Self::new(Complex64::new(coeff, 0.0), ops)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockSpace {
    labels: Vec<String>,
}

fn sign_below(state: usize, mode: usize) -> f64 {
    if (state & ((1usize << mode) - 1)).count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Applies `op` to basis state `state`, returning the sign and new state.
fn apply_op(op: Op, state: usize) -> Option<(f64, usize)> {
    match op {
        Op::Create(m) if state & (1 << m) == 0 => Some((sign_below(state, m), state | (1 << m))),
        Op::Annihilate(m) if state & (1 << m) != 0 => {
            Some((sign_below(state, m), state & !(1 << m)))
        }
        _ => None,
    }
}

fn apply_string(ops: &[Op], state: usize) -> Option<(f64, usize)> {
    let mut sign = 1.0;
    let mut s = state;
    for &op in ops.iter().rev() {
        let (sg, next) = apply_op(op, s)?;
        sign *= sg;
        s = next;
    }
    Some((sign, s))
}

impl FockSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_FOCK_MODES {
            return Err(Error::FockTooLarge {
                modes: labels.len(),
                limit: MAX_FOCK_MODES,
            });
        }
        Ok(Self { labels })
    }

    /// Real-space chain of `sites` modes labelled `c1 … c{sites}`.
    pub fn chain(sites: usize) -> Result<Self> {
        Self::new((1..=sites).map(|l| format!("c{l}")))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn modes(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    fn check_ops(&self, ops: &[Op]) -> Result<()> {
        for op in ops {
            let (Op::Create(m) | Op::Annihilate(m)) = *op;
            if m >= self.modes() {
                return Err(Error::DimensionMismatch(format!(
                    "mode {m} outside a space of {} modes",
                    self.modes()
                )));
            }
        }
        Ok(())
    }

    /// Dense matrix of a sum of operator strings.
    pub fn operator(&self, terms: &[Term]) -> Result<ComplexMatrix> {
        for t in terms {
            self.check_ops(&t.ops)?;
        }
        let dim = self.dim();
        let mut m = ComplexMatrix::zeros(dim, dim);
        for s in 0..dim {
            for t in terms {
                if let Some((sign, out)) = apply_string(&t.ops, s) {
                    m[(out, s)] += t.coeff * sign;
                }
            }
        }
        Ok(m)
    }

    /// Applies a sum of operator strings to a vector without forming the matrix.
    pub fn apply(&self, terms: &[Term], v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} on a space of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        for t in terms {
            self.check_ops(&t.ops)?;
        }
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        for (s, &amp) in v.iter().enumerate() {
            if amp == Complex64::new(0.0, 0.0) {
                continue;
            }
            for t in terms {
                if let Some((sign, o)) = apply_string(&t.ops, s) {
                    out[o] += t.coeff * sign * amp;
                }
            }
        }
        Ok(out)
    }

    pub fn creation(&self, mode: usize) -> Result<ComplexMatrix> {
        self.operator(&[Term::real(1.0, vec![Op::Create(mode)])])
    }

    pub fn annihilation(&self, mode: usize) -> Result<ComplexMatrix> {
        self.operator(&[Term::real(1.0, vec![Op::Annihilate(mode)])])
    }

    pub fn vacuum(&self) -> FockVector {
        let mut amps = vec![Complex64::new(0.0, 0.0); self.dim()];
        amps[0] = Complex64::new(1.0, 0.0);
        FockVector {
            space: self.clone(),
            amplitudes: amps,
        }
    }

    /// Basis indices of even and odd total occupation.
    pub fn parity_sectors(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.dim()).partition(|s| s.count_ones() % 2 == 0)
    }
}

/// Amplitudes over the occupation basis of a named mode set.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector {
    pub space: FockSpace,
    pub amplitudes: Vec<Complex64>,
}

impl FockVector {
    pub fn new(space: FockSpace, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for a space of dimension {}",
                amplitudes.len(),
                space.dim()
            )));
        }
        Ok(Self { space, amplitudes })
    }

    pub fn norm(&self) -> f64 {
        vec_norm(&self.amplitudes)
    }

    /// `⟨self|other⟩`.
    pub fn overlap(&self, other: &FockVector) -> Result<Complex64> {
        if self.space.dim() != other.space.dim() {
            return Err(Error::DimensionMismatch(
                "overlap between vectors on different spaces".into(),
            ));
        }
        Ok(inner(&self.amplitudes, &other.amplitudes))
    }

    /// Re-expresses the state in another mode set.
    ///
    /// `creators[m][l]` is the coefficient of target mode `l` in the creation
    /// operator of source mode `m`: `d†_m = Σ_l creators[m][l] c†_l`.
    pub fn transform(&self, target: &FockSpace, creators: &[Vec<Complex64>]) -> Result<FockVector> {
        if creators.len() != self.space.modes() {
            return Err(Error::DimensionMismatch(format!(
                "{} creator rows for {} source modes",
                creators.len(),
                self.space.modes()
            )));
        }
        if creators.iter().any(|row| row.len() != target.modes()) {
            return Err(Error::DimensionMismatch(
                "creator rows must match the target mode count".into(),
            ));
        }
        let zero = Complex64::new(0.0, 0.0);
        let dim = target.dim();
        let mut out = vec![zero; dim];
        for (s, &amp) in self.amplitudes.iter().enumerate() {
            if amp == zero {
                continue;
            }
            let mut v = vec![zero; dim];
            v[0] = amp;
            // d†_{i1} … d†_{ir}|0⟩: apply the highest mode first
            for m in (0..self.space.modes()).rev() {
                if s & (1 << m) == 0 {
                    continue;
                }
                let mut next = vec![zero; dim];
                for (t, &a) in v.iter().enumerate() {
                    if a == zero {
                        continue;
                    }
                    for (l, &u) in creators[m].iter().enumerate() {
                        if u == zero || t & (1 << l) != 0 {
                            continue;
                        }
                        next[t | (1 << l)] += a * u * sign_below(t, l);
                    }
                }
                v = next;
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o += x;
            }
        }
        FockVector::new(target.clone(), out)
    }
}
