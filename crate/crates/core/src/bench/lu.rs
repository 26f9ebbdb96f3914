//! Batched LU decomposition without pivoting, the variable-workload
//! experiment kernel.
//!
//! The outer elimination step `i` is inherently sequential; the row loop
//! below it is what gets distributed. A batch holds `m` matrices stored
//! row-interleaved (`row j` of every matrix is contiguous), so one
//! `split_at_mut` per step separates the frozen pivot rows from the rows
//! still being updated, and each worker's contiguous chunk covers its row
//! range across all `m` matrices. The parallel region therefore does `m`
//! matrices worth of work between consecutive barriers.
//!
//! Every row update reads only the pivot row of the same matrix and writes
//! only its own row, so the per-element float operations are identical in
//! the sequential and distributed schedules and the outputs match bitwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exec::{carve_mut, partition, Workers};

/// `m` square matrices of size `z`, row-interleaved: element `(j, l)` of
/// matrix `d` lives at `(j*m + d)*z + l`.
#[derive(Debug, Clone, PartialEq)]
pub struct LuBatch {
    z: usize,
    m: usize,
    u: Vec<f64>,
    l: Vec<f64>,
}

impl LuBatch {
    /// Fill `U` with random integer values from `range` (matrix by matrix
    /// within each row, so the data is a pure function of the seed) and
    /// `L` with identities.
    pub fn generate(z: usize, m: usize, range: (i64, i64), seed: u64) -> Self {
        assert!(z >= 1 && m >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u: Vec<f64> =
            (0..z * m * z).map(|_| rng.random_range(range.0..=range.1) as f64).collect();
        let mut l = vec![0.0; z * m * z];
        for j in 0..z {
            for d in 0..m {
                l[(j * m + d) * z + j] = 1.0;
            }
        }
        LuBatch { z, m, u, l }
    }

    pub fn size(&self) -> usize {
        self.z
    }

    pub fn count(&self) -> usize {
        self.m
    }

    /// Row-major copy of matrix `d` from the `U` buffer (the input matrix
    /// before decomposition, the upper factor after).
    pub fn matrix_u(&self, d: usize) -> Vec<f64> {
        self.extract(&self.u, d)
    }

    /// Row-major copy of matrix `d` from the `L` buffer.
    pub fn matrix_l(&self, d: usize) -> Vec<f64> {
        self.extract(&self.l, d)
    }

    fn extract(&self, buf: &[f64], d: usize) -> Vec<f64> {
        assert!(d < self.m);
        let (z, m) = (self.z, self.m);
        let mut out = Vec::with_capacity(z * z);
        for j in 0..z {
            out.extend_from_slice(&buf[(j * m + d) * z..(j * m + d) * z + z]);
        }
        out
    }

    /// Eliminate all matrices in the batch, distributing each step's row
    /// loop over the workers in static contiguous ranges. The call to
    /// [`Workers::run`] at each step is the barrier: step `i + 1` starts
    /// only after every row of step `i` is done.
    pub fn decompose(&mut self, workers: &Workers) {
        let (z, m) = (self.z, self.m);
        let stride = m * z;
        for i in 0..z.saturating_sub(1) {
            let boundary = (i + 1) * stride;
            let (u_head, u_tail) = self.u.split_at_mut(boundary);
            let pivots = &u_head[i * stride..];
            let (_, l_tail) = self.l.split_at_mut(boundary);

            let ranges = partition(z - 1 - i, workers.threads());
            let sizes: Vec<usize> = ranges.iter().map(|r| r.len() * stride).collect();
            let items: Vec<(&mut [f64], &mut [f64])> = carve_mut(u_tail, &sizes)
                .into_iter()
                .zip(carve_mut(l_tail, &sizes))
                .collect();

            workers.run(items, |(u_chunk, l_chunk)| {
                let rows = u_chunk.len() / stride;
                for d in 0..m {
                    let piv = &pivots[d * z..(d + 1) * z];
                    for r in 0..rows {
                        let off = r * stride + d * z;
                        let u_row = &mut u_chunk[off..off + z];
                        let l_row = &mut l_chunk[off..off + z];
                        let factor = u_row[i] / piv[i];
                        l_row[i] = factor;
                        for (u_val, p_val) in u_row[i + 1..].iter_mut().zip(&piv[i + 1..]) {
                            *u_val -= factor * p_val;
                        }
                        u_row[..=i].fill(0.0);
                    }
                }
            });
        }
    }

    /// Plain sequential elimination, matrix by matrix. Independent of the
    /// distributed path; used as its reference.
    pub fn decompose_seq(&mut self) {
        let (z, m) = (self.z, self.m);
        let mut pivot = vec![0.0; z];
        for d in 0..m {
            for i in 0..z.saturating_sub(1) {
                for (col, p) in pivot.iter_mut().enumerate() {
                    *p = self.u[(i * m + d) * z + col];
                }
                for j in i + 1..z {
                    let off = (j * m + d) * z;
                    let factor = self.u[off + i] / pivot[i];
                    self.l[off + i] = factor;
                    for (col, p_val) in pivot.iter().enumerate().skip(i + 1) {
                        self.u[off + col] -= factor * p_val;
                    }
                    self.u[off..=off + i].fill(0.0);
                }
            }
        }
    }
}

/// Row-major product of two `z × z` matrices.
pub fn multiply_square(a: &[f64], b: &[f64], z: usize) -> Vec<f64> {
    assert_eq!(a.len(), z * z);
    assert_eq!(b.len(), z * z);
    let mut c = vec![0.0; z * z];
    for i in 0..z {
        for k in 0..z {
            let av = a[i * z + k];
            if av == 0.0 {
                continue;
            }
            let b_row = &b[k * z..(k + 1) * z];
            for (c_val, b_val) in c[i * z..(i + 1) * z].iter_mut().zip(b_row) {
                *c_val += av * b_val;
            }
        }
    }
    c
}
