use std::collections::BTreeMap;

use crate::exactfield::{Cyclo, CyclotomicField, FieldError};

/// Sparse linear combination keyed by basis indices; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sparse<K: Ord>(BTreeMap<K, Cyclo>);

pub type Vector = Sparse<usize>;
pub type Tensor = Sparse<(usize, usize)>;
pub type Tensor3 = Sparse<(usize, usize, usize)>;

impl<K: Ord + Clone> Default for Sparse<K> {
    fn default() -> Self {
        Sparse(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Sparse<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K, one: &Cyclo) -> Self {
        let mut s = Self::zero();
        s.add_term(k, one);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Cyclo)>) -> Self {
        let mut s = Self::zero();
        for (k, c) in terms {
            s.add_term(k, &c);
        }
        s
    }

    pub fn add_term(&mut self, k: K, c: &Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&k) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.0.remove(&k);
                } else {
                    *v = s;
                }
            }
            None => {
                self.0.insert(k, c.clone());
            }
        }
    }

    /// self += c · other
    pub fn add_scaled(&mut self, c: &Cyclo, other: &Self) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), &(c * v));
        }
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Sparse(self.0.iter().map(|(k, v)| (k.clone(), c * v)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (k, v) in other.iter() {
            s.add_term(k.clone(), &-v);
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Cyclo)> {
        self.0.iter()
    }

    pub fn get(&self, k: &K) -> Option<&Cyclo> {
        self.0.get(k)
    }

    pub fn coeff(&self, k: &K, field: &CyclotomicField) -> Cyclo {
        self.0.get(k).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn embed(&self, target: &CyclotomicField) -> Result<Self, FieldError> {
        Ok(Sparse(self.0.iter().map(|(k, v)| Ok((k.clone(), v.embed(target)?))).collect::<Result<_, FieldError>>()?))
    }
}

impl Vector {
    pub fn to_dense(&self, dim: usize, field: &CyclotomicField) -> Vec<Cyclo> {
        (0..dim).map(|i| self.coeff(&i, field)).collect()
    }
}
