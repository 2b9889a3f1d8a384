/// An irreducible factorization: `unit · Π factorᵢ^{multᵢ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList<U, P> {
    pub unit: U,
    pub factors: Vec<(P, u32)>,
}

impl<U, P> FactorList<U, P> {
    /// Degrees with multiplicity, in factor order.
    pub fn degree_multiset(&self, deg: impl Fn(&P) -> usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                out.push(deg(f));
            }
        }
        out
    }
}
