//! Formal sums with coefficients in F2.

use std::collections::btree_set;
use std::collections::BTreeSet;

/// A finite sum of basis objects over F2. Adding an element twice cancels it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Sum<T: Ord>(BTreeSet<T>);

impl<T: Ord> Default for F2Sum<T> {
    fn default() -> Self {
        F2Sum(BTreeSet::new())
    }
}

impl<T: Ord> F2Sum<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(t: T) -> Self {
        let mut s = Self::new();
        s.add(t);
        s
    }

    pub fn add(&mut self, t: T) {
        if !self.0.remove(&t) {
            self.0.insert(t);
        }
    }

    pub fn add_sum(&mut self, other: F2Sum<T>) {
        for t in other.0 {
            self.add(t);
        }
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

    pub fn contains(&self, t: &T) -> bool {
        self.0.contains(t)
    }

    pub fn iter(&self) -> btree_set::Iter<'_, T> {
        self.0.iter()
    }

    pub fn first(&self) -> Option<&T> {
        self.0.iter().next()
    }

    pub fn retain(&mut self, f: impl FnMut(&T) -> bool) {
        self.0.retain(f);
    }
}

impl<T: Ord + Clone> F2Sum<T> {
    pub fn add_all<'a>(&mut self, other: &'a F2Sum<T>)
    where
        T: 'a,
    {
        for t in other.iter() {
            self.add(t.clone());
        }
    }

    pub fn map<U: Ord>(&self, mut f: impl FnMut(&T) -> U) -> F2Sum<U> {
        self.iter().map(&mut f).collect()
    }
}

impl<T: Ord> FromIterator<T> for F2Sum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = F2Sum::new();
        for t in iter {
            s.add(t);
        }
        s
    }
}

impl<T: Ord> IntoIterator for F2Sum<T> {
    type Item = T;
    type IntoIter = btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T: Ord> IntoIterator for &'a F2Sum<T> {
    type Item = &'a T;
    type IntoIter = btree_set::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_terms_cancel() {
        let s: F2Sum<u32> = [1, 2, 1, 3, 3, 3].into_iter().collect();
        assert_eq!(s.iter().copied().collect::<Vec<_>>(), vec![2, 3]);
    }
}
