//! Row-partitioned integer matrix multiplication, the fixed-workload
//! experiment kernel. No blocking, no vectorization hints: plain scalar
//! products, which is the workload the fixed-size model describes.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exec::{carve_mut, partition, Workers};

pub(crate) fn generate(rows: usize, cols: usize, range: (i64, i64), rng: &mut ChaCha8Rng) -> Vec<i64> {
    (0..rows * cols).map(|_| rng.random_range(range.0..=range.1)).collect()
}

/// `C = A·B` with the rows of `C` split into one contiguous chunk per
/// worker.
pub(crate) fn multiply(
    a: &[i64],
    b: &[i64],
    rows_a: usize,
    inner: usize,
    cols_b: usize,
    workers: &Workers,
) -> Vec<i64> {
    assert_eq!(a.len(), rows_a * inner);
    assert_eq!(b.len(), inner * cols_b);
    let mut c = vec![0i64; rows_a * cols_b];
    let ranges = partition(rows_a, workers.threads());
    let sizes: Vec<usize> = ranges.iter().map(|r| r.len() * cols_b).collect();
    let chunks = carve_mut(&mut c, &sizes);
    let items: Vec<(std::ops::Range<usize>, &mut [i64])> = ranges.into_iter().zip(chunks).collect();
    workers.run(items, |(rows, chunk)| {
        for (local, row) in rows.clone().enumerate() {
            let a_row = &a[row * inner..(row + 1) * inner];
            let out = &mut chunk[local * cols_b..(local + 1) * cols_b];
            for (col, out_cell) in out.iter_mut().enumerate() {
                let mut acc = 0i64;
                for (k, &a_val) in a_row.iter().enumerate() {
                    acc += a_val * b[k * cols_b + col];
                }
                *out_cell = acc;
            }
        }
    });
    c
}
