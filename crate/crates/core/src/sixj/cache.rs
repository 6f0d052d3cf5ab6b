use std::num::NonZeroUsize;

use lru::LruCache;
use parking_lot::Mutex;

use super::{c_alpha_auto, normalization, sixj_from_c_alpha, CAlpha, Method, SixJValue};
use crate::error::Result;
use crate::exact::Rational;
use crate::labels::{canonical, SixJLabels};

/// Bounded memo of `c / norm` with the selected method, keyed by the
/// canonical orbit member.
pub struct SixJCache {
    inner: Mutex<LruCache<SixJLabels, (Rational, Method, u64)>>,
}

impl SixJCache {
    pub fn new(capacity: usize) -> Self {
        let cap = NonZeroUsize::new(capacity.max(1)).expect("positive");
        SixJCache { inner: Mutex::new(LruCache::new(cap)) }
    }

    pub fn len(&self) -> usize {
        self.inner.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sixj(&self, labels: &SixJLabels) -> Result<SixJValue> {
        let key = canonical(labels)?;
        let hit = self.inner.lock().get(&key).cloned();
        let (reduced, method, predicted) = match hit {
            Some(entry) => entry,
            None => {
                let (c, sel) = c_alpha_auto(labels)?;
                let entry = (&c.value / normalization(labels), sel.method, sel.predicted_terms);
                self.inner.lock().put(key, entry.clone());
                entry
            }
        };
        let c = CAlpha { value: reduced * normalization(labels), labels: *labels, method };
        Ok(SixJValue {
            value: sixj_from_c_alpha(&c)?,
            labels: *labels,
            method: c.method,
            predicted_terms: predicted,
        })
    }
}
