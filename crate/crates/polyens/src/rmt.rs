use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type ComplexMatrix = DMatrix<Complex64>;

#[derive(Debug, Clone, Copy)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub fn rng(&self) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(self.stream);
        r
    }
}

pub struct HermitianMatrix(pub ComplexMatrix);
pub struct RealSpectrum(pub Vec<f64>);

pub fn probe() -> (Vec<f64>, f64) {
    let i = Complex64::new(0.0, 1.0);
    let m = DMatrix::from_row_slice(2, 2, &[
        Complex64::new(2.0, 0.0), i,
        -i, Complex64::new(2.0, 0.0),
    ]);
    let se = m.clone().symmetric_eigen();
    let mut ev: Vec<f64> = se.eigenvalues.iter().cloned().collect();
    ev.sort_by(f64::total_cmp);
    // QR of a complex matrix
    let qr = m.qr();
    let q = qr.q();
    let resid = (&q * q.adjoint() - DMatrix::<Complex64>::identity(2, 2)).norm();
    let mut rng = RngStream { seed: 7, stream: 3 }.rng();
    let x: f64 = rng.random();
    (ev, resid + x * 0.0)
}

pub fn hermitian_eigenvalues() {}
pub fn sample_ginibre() {}
pub fn sample_gue() {}
pub fn sample_haar_unitary() {}
pub fn squared_singular_values() {}
