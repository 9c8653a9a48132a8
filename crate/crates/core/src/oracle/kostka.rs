use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{all_partitions, Partition};

/// A semistandard Young tableau: rows weakly increase left to right and
/// columns strictly increase top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ssyt {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::BadShape("rows must have weakly decreasing lengths".into()))?;
        for (r, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::BadShape("entries are positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::BadShape(format!("row {} decreases", r + 1)));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(x, above)| x <= above) {
                return Err(Error::BadShape(format!("column fails to increase at row {}", r + 1)));
            }
        }
        Ok(Ssyt { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `weight[i]` is the number of entries equal to `i + 1`.
    pub fn weight(&self) -> Vec<usize> {
        let top = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut w = vec![0; top];
        for &x in self.rows.iter().flatten() {
            w[x - 1] += 1;
        }
        w
    }
}

/// Every SSYT of `shape` with content `content`, filling cells in row-major
/// order.
pub fn ssyt_with_content(shape: &Partition, content: &[usize]) -> Vec<Ssyt> {
    let mut out = Vec::new();
    fill_cells(shape, content, |rows| {
        out.push(Ssyt {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    });
    out
}

fn fill_cells(shape: &Partition, content: &[usize], mut emit: impl FnMut(&[Vec<usize>])) {
    if shape.weight() != content.iter().sum::<usize>() {
        return;
    }
    let cells: Vec<(usize, usize)> = shape.diagram().cells().map(|(r, c)| (r - 1, c - 1)).collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut left = content.to_vec();

    fn go(
        i: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        left: &mut Vec<usize>,
        emit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if i == cells.len() {
            emit(rows);
            return;
        }
        let (r, c) = cells[i];
        let low = {
            let from_left = if c > 0 { rows[r][c - 1] } else { 1 };
            let from_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
            from_left.max(from_above)
        };
        for x in low..=left.len() {
            if left[x - 1] == 0 {
                continue;
            }
            left[x - 1] -= 1;
            rows[r].push(x);
            go(i + 1, cells, rows, left, emit);
            rows[r].pop();
            left[x - 1] += 1;
        }
    }
    go(0, &cells, &mut rows, &mut left, &mut emit);
}

/// Number of SSYT of shape `lambda` and content `mu`, by backtracking.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if lambda.weight() != mu.weight() {
        return Err(Error::UnequalWeight {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let mut count = 0u64;
    fill_cells(lambda, mu.parts(), |_| count += 1);
    Ok(BigUint::from(count))
}

/// Kostka numbers for every pair of partitions of `degree`, rows and
/// columns in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct KostkaMatrix {
    degree: usize,
    partitions: Vec<Partition>,
    entries: Vec<Vec<BigUint>>,
}

impl KostkaMatrix {
    pub fn new(degree: usize) -> Self {
        let partitions: Vec<Partition> = all_partitions(degree);
        let entries = partitions
            .par_iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| {
                        if lambda.dominates(mu).expect("same weight") {
                            kostka(lambda, mu).expect("same weight")
                        } else {
                            BigUint::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        KostkaMatrix {
            degree,
            partitions,
            entries,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.partitions.iter().position(|p| p == lambda)
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> BigUint {
        match (self.index_of(lambda), self.index_of(mu)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigUint::zero(),
        }
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.entries[i]
    }

    /// Inverse matrix, by back substitution on the unitriangular form.
    pub fn inverse(&self) -> Vec<Vec<BigInt>> {
        let n = self.partitions.len();
        let k: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().cloned().map(BigInt::from).collect())
            .collect();
        let mut inv = vec![vec![BigInt::zero(); n]; n];
        // Upper unitriangular: K[i][j] = 0 for j < i.
        for j in 0..n {
            inv[j][j] = BigInt::one();
            for i in (0..j).rev() {
                let mut acc = BigInt::zero();
                for m in i + 1..=j {
                    acc += &k[i][m] * &inv[m][j];
                }
                inv[i][j] = -acc;
            }
        }
        inv
    }
}
