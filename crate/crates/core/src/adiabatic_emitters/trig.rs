//! Finite Fourier series `Σ_k [c_k cos(kΩt) + s_k sin(kΩt)]` with exact
//! products and derivatives.

#[derive(Debug, Clone, PartialEq)]
pub struct TrigSeries {
    omega: f64,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl TrigSeries {
    /// `cos[k]`, `sin[k]` multiply `cos(kΩt)`, `sin(kΩt)`; `sin[0]` is ignored.
    pub fn new(omega: f64, mut cos: Vec<f64>, mut sin: Vec<f64>) -> Self {
        let n = cos.len().max(sin.len()).max(1);
        cos.resize(n, 0.0);
        sin.resize(n, 0.0);
        sin[0] = 0.0;
        Self { omega, cos, sin }
    }

    pub fn constant(omega: f64, value: f64) -> Self {
        Self::new(omega, vec![value], vec![0.0])
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Highest harmonic present.
    pub fn degree(&self) -> usize {
        self.cos.len() - 1
    }

    pub fn eval(&self, t: f64) -> f64 {
        let theta = self.omega * t;
        self.cos
            .iter()
            .zip(&self.sin)
            .enumerate()
            .map(|(k, (c, s))| {
                let (sn, cs) = (k as f64 * theta).sin_cos();
                c * cs + s * sn
            })
            .sum()
    }

    /// Mean over one period (the constant term).
    pub fn mean(&self) -> f64 {
        self.cos[0]
    }

    pub fn derivative(&self, order: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..order {
            for k in 0..out.cos.len() {
                let w = k as f64 * self.omega;
                let (c, s) = (out.cos[k], out.sin[k]);
                out.cos[k] = w * s;
                out.sin[k] = -w * c;
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.cos.len() + other.cos.len() - 1;
        let mut cos = vec![0.0; n];
        let mut sin = vec![0.0; n];
        for (i, (ci, si)) in self.cos.iter().zip(&self.sin).enumerate() {
            for (j, (cj, sj)) in other.cos.iter().zip(&other.sin).enumerate() {
                let sum = i + j;
                let diff = i.abs_diff(j);
                // cos·cos, sin·sin, sin·cos product-to-sum identities
                cos[sum] += 0.5 * (ci * cj - si * sj);
                cos[diff] += 0.5 * (ci * cj + si * sj);
                sin[sum] += 0.5 * (si * cj + ci * sj);
                // sin(a-b) picks up the sign of i - j
                let cross = 0.5 * (si * cj - ci * sj);
                if i >= j {
                    sin[diff] += cross;
                } else {
                    sin[diff] -= cross;
                }
            }
        }
        sin[0] = 0.0;
        Self {
            omega: self.omega,
            cos,
            sin,
        }
    }

    pub fn powi(&self, p: u32) -> Self {
        let mut out = Self::constant(self.omega, 1.0);
        for _ in 0..p {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(mut self, factor: f64) -> Self {
        self.cos
            .iter_mut()
            .chain(self.sin.iter_mut())
            .for_each(|v| *v *= factor);
        self
    }
}
