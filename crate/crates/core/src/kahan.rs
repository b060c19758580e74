//! Compensated floating-point summation.

/// Kahan summation state.
///
/// Keeps a running compensation term so that adding `n` values loses
/// O(eps) rather than O(n eps) accuracy. Series in this crate are summed
/// in ascending index order with decaying terms, which this scheme handles
/// well.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: f64) {
        let y = term - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

impl std::ops::AddAssign<f64> for KahanSum {
    fn add_assign(&mut self, term: f64) {
        self.add(term);
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for term in iter {
            acc.add(term);
        }
        acc
    }
}
