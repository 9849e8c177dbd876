use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Momenta `k = 2πm/N` folded into the self-conjugate points `{0, π}` and
/// the `N/2 − 1` pairs `±k` with `k ∈ (0, π)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumGrid {
    pub n: usize,
    pub singles: [f64; 2],
    pub pairs: Vec<f64>,
}

pub fn momentum_grid(n: usize) -> Result<MomentumGrid> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "N must be even and at least 2 (got {n})"
        )));
    }
    let pairs = (1..n / 2).map(|m| 2.0 * PI * m as f64 / n as f64).collect();
    Ok(MomentumGrid {
        n,
        singles: [0.0, PI],
        pairs,
    })
}

impl MomentumGrid {
    /// Every momentum of the grid in `[0, 2π)`, with `−k` represented as `2π − k`.
    pub fn unfolded(&self) -> Vec<f64> {
        let mut all = vec![self.singles[0], self.singles[1]];
        for &k in &self.pairs {
            all.push(k);
            all.push(2.0 * PI - k);
        }
        all
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids() {
        let g = momentum_grid(4).unwrap();
        assert_eq!(g.singles, [0.0, PI]);
        assert_eq!(g.pairs, vec![PI / 2.0]);
        let g = momentum_grid(8).unwrap();
        let want = [PI / 4.0, PI / 2.0, 3.0 * PI / 4.0];
        assert_eq!(g.pairs.len(), 3);
        for (a, b) in g.pairs.iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(momentum_grid(2).unwrap().pairs.is_empty());
    }

    #[test]
    fn rejects_odd() {
        assert!(momentum_grid(7).is_err());
        assert!(momentum_grid(0).is_err());
    }

    #[test]
    fn unfolded_covers_every_m_once() {
        for n in [2usize, 4, 6, 10, 64] {
            let g = momentum_grid(n).unwrap();
            let mut ms: Vec<usize> = g
                .unfolded()
                .iter()
                .map(|k| (k * n as f64 / (2.0 * PI)).round() as usize)
                .collect();
            ms.sort_unstable();
            assert_eq!(ms, (0..n).collect::<Vec<_>>());
        }
    }
}
