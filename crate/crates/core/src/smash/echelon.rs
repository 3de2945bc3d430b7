//! Exact row reduction on sparse vectors.

use crate::exactfield::Cyclo;
use crate::hopfcore::Sparse;

/// A fully reduced row echelon form: every row has pivot coefficient 1 and
/// vanishes at the pivots of all other rows. Rows are kept sorted by pivot.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, Sparse<K>)>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a Sparse<K>>) -> Self
    where
        K: 'a,
    {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Sparse<K>> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.iter().map(|(p, _)| p)
    }

    /// v minus its projection onto the span along the pivots.
    pub fn reduce(&self, v: &Sparse<K>) -> Sparse<K> {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = v.get(p) {
                out.add_scaled(&-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &Sparse<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of v in the row basis, if v lies in the span.
    pub fn coordinates(&self, v: &Sparse<K>, zero: &Cyclo) -> Option<Vec<Cyclo>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.iter().map(|(p, _)| v.get(p).cloned().unwrap_or_else(|| zero.clone())).collect())
    }

    /// Add v to the span; returns false if it was already there.
    pub fn insert(&mut self, v: &Sparse<K>) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let row = r.scale(&c.inverse().expect("nonzero pivot"));
        for (_, other) in self.rows.iter_mut() {
            if let Some(d) = other.get(&p).cloned() {
                other.add_scaled(&-&d, &row);
            }
        }
        let at = self.rows.partition_point(|(q, _)| q < &p);
        self.rows.insert(at, (p, row));
        true
    }
}
