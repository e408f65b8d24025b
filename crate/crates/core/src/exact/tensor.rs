use std::ops::{Index, IndexMut};

/// Dense three-index array, indexed `(i, j, k)` in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3<T> {
    dims: (usize, usize, usize),
    entries: Vec<T>,
}

impl<T: Clone> Tensor3<T> {
    pub fn filled(dims: (usize, usize, usize), value: T) -> Self {
        Self {
            dims,
            entries: vec![value; dims.0 * dims.1 * dims.2],
        }
    }
}

impl<T> Tensor3<T> {
    pub fn from_fn(dims: (usize, usize, usize), mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dims.0 * dims.1 * dims.2);
        for i in 0..dims.0 {
            for j in 0..dims.1 {
                for k in 0..dims.2 {
                    entries.push(f(i, j, k));
                }
            }
        }
        Self { dims, entries }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&T> {
        (i < self.dims.0 && j < self.dims.1 && k < self.dims.2)
            .then(|| &self.entries[self.offset(i, j, k)])
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// Iterates `((i, j, k), value)` in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), &T)> {
        let (_, d1, d2) = self.dims;
        self.entries
            .iter()
            .enumerate()
            .map(move |(n, v)| ((n / (d1 * d2), (n / d2) % d1, n % d2), v))
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims.1 + j) * self.dims.2 + k
    }
}

impl<T> Index<(usize, usize, usize)> for Tensor3<T> {
    type Output = T;

    fn index(&self, (i, j, k): (usize, usize, usize)) -> &T {
        assert!(
            i < self.dims.0 && j < self.dims.1 && k < self.dims.2,
            "index ({i},{j},{k}) out of bounds for {:?}",
            self.dims
        );
        &self.entries[self.offset(i, j, k)]
    }
}

impl<T> IndexMut<(usize, usize, usize)> for Tensor3<T> {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut T {
        assert!(
            i < self.dims.0 && j < self.dims.1 && k < self.dims.2,
            "index ({i},{j},{k}) out of bounds for {:?}",
            self.dims
        );
        let o = self.offset(i, j, k);
        &mut self.entries[o]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_matches_index() {
        let t = Tensor3::from_fn((2, 3, 4), |i, j, k| 100 * i + 10 * j + k);
        for ((i, j, k), v) in t.iter() {
            assert_eq!(*v, t[(i, j, k)]);
        }
        assert_eq!(t.get(2, 0, 0), None);
    }
}
