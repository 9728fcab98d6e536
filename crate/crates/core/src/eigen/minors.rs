use num_bigint::BigInt;

use crate::mpoly::{MPoly, RationalMapData};

/// The 2x2 minors of the matrix with rows `x` and `Psi(x)`.
///
/// Their common zeros are the eigenpoints of the map.
#[derive(Debug, Clone)]
pub struct EigenMinors {
    n: usize,
    d: u32,
    psi: Vec<MPoly<BigInt>>,
}

impl EigenMinors {
    pub fn new(map: &RationalMapData) -> Self {
        EigenMinors { n: map.n(), d: map.d(), psi: map.forms().to_vec() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of every minor.
    pub fn degree(&self) -> u32 {
        self.d
    }

    /// `delta_ij = x_i psi_j - x_j psi_i`.
    pub fn pair(&self, i: usize, j: usize) -> MPoly<BigInt> {
        let xi = MPoly::var(i, self.n);
        let xj = MPoly::var(j, self.n);
        &(&xi * &self.psi[j]) - &(&xj * &self.psi[i])
    }

    /// The single minor `x0 psi1 - x1 psi0` of a map of the line.
    pub fn binary(&self) -> MPoly<BigInt> {
        self.pair(0, 1)
    }

    /// For `n = 3`: `delta_0 = x2 psi1 - x1 psi2`, `delta_1 = x0 psi2 - x2 psi0`,
    /// `delta_2 = x1 psi0 - x0 psi1`, so that `sum x_k delta_k = 0`.
    pub fn ternary(&self, k: usize) -> MPoly<BigInt> {
        assert_eq!(self.n, 3, "ternary minors need n = 3");
        self.pair((k + 2) % 3, (k + 1) % 3)
    }

    /// Checks the linear syzygy among the ternary minors, or the Plücker
    /// type relations `x_i delta_jk - x_j delta_ik + x_k delta_ij = 0` for
    /// `n = 4`.
    pub fn syzygy_holds(&self) -> bool {
        let x = |i| MPoly::var(i, self.n);
        match self.n {
            2 => true,
            3 => (0..3).fold(MPoly::zero(3), |acc, k| &acc + &(&x(k) * &self.ternary(k))).is_zero(),
            _ => {
                for i in 0..self.n {
                    for j in i + 1..self.n {
                        for k in j + 1..self.n {
                            let s = &(&(&x(i) * &self.pair(j, k)) - &(&x(j) * &self.pair(i, k)))
                                + &(&x(k) * &self.pair(i, j));
                            if !s.is_zero() {
                                return false;
                            }
                        }
                    }
                }
                true
            }
        }
    }
}
