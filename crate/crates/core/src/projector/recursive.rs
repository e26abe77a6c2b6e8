use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::ProjectorError;
use crate::diagram::{Diagram, Flavor};
use crate::scalar::{qratio, qratio_b, Scalar};

/// Memo table for the innermost-cap recursion
/// `Coeff^(n)(D) = sum_i ([i]/[n]) Coeff^(n-1)(D_i)`.
///
/// Safe to share between threads; lookups take a read lock and results are
/// inserted under a short write lock.
pub struct CoeffCache {
    flavor: Flavor,
    memo: RwLock<HashMap<Diagram, Scalar>>,
}

impl CoeffCache {
    pub fn new(flavor: Flavor) -> Self {
        Self {
            flavor,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Preloads a known coefficient, e.g. from a persisted cache.
    pub fn seed(&self, d: Diagram, c: Scalar) -> Result<(), ProjectorError> {
        d.check_flavor(self.flavor)?;
        self.memo.write().unwrap_or_else(|e| e.into_inner()).insert(d, c);
        Ok(())
    }

    /// Every memoized entry in canonical diagram order.
    pub fn snapshot(&self) -> Vec<(Diagram, Scalar)> {
        let memo = self.memo.read().unwrap_or_else(|e| e.into_inner());
        let mut out: Vec<_> = memo.iter().map(|(d, c)| (d.clone(), c.clone())).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn coeff(&self, d: &Diagram) -> Result<Scalar, ProjectorError> {
        d.check_flavor(self.flavor)?;
        Ok(self.lookup(d))
    }

    fn lookup(&self, d: &Diagram) -> Scalar {
        if d.n() == 0 {
            return Scalar::one();
        }
        if let Some(c) = self.memo.read().unwrap_or_else(|e| e.into_inner()).get(d) {
            return c.clone();
        }
        let n = d.n();
        let mut acc = Scalar::zero();
        for i in d.innermost_caps() {
            let sub = d.remove_cap(i).expect("listed innermost cap");
            let w = match self.flavor {
                Flavor::A => qratio(i, n),
                Flavor::B => qratio_b(i, n),
            };
            acc = &acc + &(&w * &self.lookup(&sub));
        }
        self.memo
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .insert(d.clone(), acc.clone());
        acc
    }
}

/// Coefficient of `d` in the projection of its flavor, through a
/// process-wide cache per flavor.
pub fn coeff_recursive(flavor: Flavor, d: &Diagram) -> Result<Scalar, ProjectorError> {
    static CACHES: OnceLock<[CoeffCache; 2]> = OnceLock::new();
    let caches = CACHES.get_or_init(|| [CoeffCache::new(Flavor::A), CoeffCache::new(Flavor::B)]);
    match flavor {
        Flavor::A => caches[0].coeff(d),
        Flavor::B => caches[1].coeff(d),
    }
}
