//! Exact integer matrix rank by fraction-free Gaussian elimination.
//!
//! Boundary matrices here have entries in {-1, 0, 1} and a handful of
//! rows, so Bareiss elimination in `i128` never overflows (minors are
//! bounded by Hadamard's inequality well below 2^127).

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn set(&mut self, r: usize, c: usize, value: i128) {
        self.data[r * self.cols + c] = value;
    }

    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    /// Rank over the rationals (equivalently over the integers).
    pub fn rank(&self) -> usize {
        rank_over(self.rows, self.cols, self.data.clone(), None)
    }

    /// Rank over the prime field `F_p`.
    pub fn rank_mod(&self, p: u32) -> usize {
        assert!(p >= 2);
        rank_over(self.rows, self.cols, self.data.clone(), Some(p as i128))
    }
}

fn rank_over(rows: usize, cols: usize, mut a: Vec<i128>, modulus: Option<i128>) -> usize {
    let reduce = |x: i128| match modulus {
        Some(p) => x.rem_euclid(p),
        None => x,
    };
    for v in a.iter_mut() {
        *v = reduce(*v);
    }
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot_row = (rank..rows).find(|&r| a[r * cols + col] != 0);
        let Some(pr) = pivot_row else {
            col += 1;
            continue;
        };
        if pr != rank {
            for c in 0..cols {
                a.swap(rank * cols + c, pr * cols + c);
            }
        }
        let pivot = a[rank * cols + col];
        for r in rank + 1..rows {
            let factor = a[r * cols + col];
            for c in col..cols {
                let v = pivot * a[r * cols + c] - factor * a[rank * cols + c];
                a[r * cols + c] = match modulus {
                    Some(p) => v.rem_euclid(p),
                    // Bareiss: the previous pivot divides exactly
                    None => v / prev_pivot,
                };
            }
        }
        prev_pivot = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i128]]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    #[test]
    fn small_ranks() {
        assert_eq!(from_rows(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(from_rows(&[&[1, 1], &[1, 1]]).rank(), 1);
        assert_eq!(from_rows(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(from_rows(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]).rank(), 2);
        assert_eq!(IntMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(IntMatrix::zeros(5, 0).rank(), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // determinant 2: full rank over Q, drops over F_2
        let m = from_rows(&[&[1, 1], &[-1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_mod(2), 1);
        assert_eq!(m.rank_mod(3), 2);
    }

    #[test]
    fn rank_against_float_oracle() {
        // deterministic pseudo-random ±1/0 matrices, checked against
        // naive f64 row reduction
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let rows = (next() % 6 + 1) as usize;
            let cols = (next() % 6 + 1) as usize;
            let mut m = IntMatrix::zeros(rows, cols);
            let mut f: Vec<Vec<f64>> = vec![vec![0.0; cols]; rows];
            for r in 0..rows {
                for c in 0..cols {
                    let v = (next() % 3) as i128 - 1;
                    m.set(r, c, v);
                    f[r][c] = v as f64;
                }
            }
            assert_eq!(m.rank(), float_rank(&mut f), "matrix {m:?}");
        }
    }

    fn float_rank(a: &mut [Vec<f64>]) -> usize {
        let rows = a.len();
        let cols = a[0].len();
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| a[r][col].abs() > 1e-9);
            let Some(pr) = pivot else { continue };
            a.swap(rank, pr);
            let p = a[rank][col];
            for r in 0..rows {
                if r != rank && a[r][col].abs() > 1e-9 {
                    let f = a[r][col] / p;
                    for c in 0..cols {
                        a[r][c] -= f * a[rank][c];
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}
