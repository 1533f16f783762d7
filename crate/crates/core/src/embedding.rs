//! Finite-scale Hilbert certification of a wall distance.
//!
//! Any finite sample of a space with walls embeds in `{0,1}^W` (one
//! coordinate per wall, recording the side) so that Hamming distance equals
//! wall distance. Squared Euclidean distance on 0/1 vectors is Hamming
//! distance, so the wall distance matrix is conditionally negative definite;
//! [`cnd_check`] verifies that numerically.

use std::collections::BTreeSet;
use std::fmt;
use std::io;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::walls::WallSpace;

/// Ordered sample without repeated elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleSet<T> {
    elements: Vec<T>,
}

impl<T: fmt::Display> SampleSet<T> {
    /// Duplicates are detected by canonical serialization.
    pub fn new(elements: Vec<T>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &elements {
            let key = e.to_string();
            if !seen.insert(key.clone()) {
                return Err(Error::DuplicateSample(key));
            }
        }
        Ok(SampleSet { elements })
    }
}

impl<T> SampleSet<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    dim: usize,
    data: Vec<i64>,
}

/// First failure found by [`DistanceMatrix::pseudometric_violation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricViolation {
    NonzeroDiagonal(usize),
    Asymmetric(usize, usize),
    Negative(usize, usize),
    Triangle(usize, usize, usize),
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Ok(DistanceMatrix { dim, data: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    /// Symmetric with nonnegative entries.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.get(i, j) < 0 {
                    return Err(Error::NegativeEntry(i, j));
                }
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn pseudometric_violation(&self) -> Option<MetricViolation> {
        let n = self.dim;
        for i in 0..n {
            if self.get(i, i) != 0 {
                return Some(MetricViolation::NonzeroDiagonal(i));
            }
            for j in 0..n {
                if self.get(i, j) < 0 {
                    return Some(MetricViolation::Negative(i, j));
                }
                if self.get(i, j) != self.get(j, i) {
                    return Some(MetricViolation::Asymmetric(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.get(i, k) > self.get(i, j) + self.get(j, k) {
                        return Some(MetricViolation::Triangle(i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `-½ P D P` with `P = I - J/n` the projection onto zero-sum vectors.
    pub fn centered(&self) -> DMatrix<f64> {
        let n = self.dim;
        let d = DMatrix::from_fn(n, n, |i, j| self.get(i, j) as f64);
        let p = DMatrix::identity(n, n) - DMatrix::from_element(n, n, 1.0 / n as f64);
        (&p * d * &p) * -0.5
    }

    pub fn write_csv<W: io::Write>(&self, labels: &[String], out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(std::iter::once("element").chain(labels.iter().map(String::as_str)))?;
        for (label, row) in labels.iter().zip(self.rows()) {
            w.write_record(std::iter::once(label.clone()).chain(row.iter().map(i64::to_string)))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Pairwise wall distances of a sample.
pub fn distance_matrix<S: WallSpace>(space: &S, sample: &SampleSet<S::Point>) -> DistanceMatrix {
    let xs = sample.elements();
    let n = xs.len();
    let mut data = vec![0i64; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d = space.wall_distance(&xs[i], &xs[j]) as i64;
            data[i * n + j] = d;
            data[j * n + i] = d;
        }
    }
    DistanceMatrix { dim: n, data }
}

/// 0/1 coordinates of a sample: one column per wall separating some pair,
/// set when the element lies in the wall's positive half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallCoordinates<W> {
    pub walls: Vec<W>,
    pub rows: Vec<Vec<bool>>,
}

impl<W> WallCoordinates<W> {
    pub fn hamming(&self, i: usize, j: usize) -> usize {
        self.rows[i].iter().zip(&self.rows[j]).filter(|(a, b)| a != b).count()
    }

    pub fn write_csv<Wr: io::Write>(&self, labels: &[String], out: Wr) -> csv::Result<()>
    where
        W: fmt::Display,
    {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(std::iter::once("element".to_string()).chain(self.walls.iter().map(ToString::to_string)))?;
        for (label, row) in labels.iter().zip(&self.rows) {
            w.write_record(
                std::iter::once(label.as_str()).chain(row.iter().map(|&b| if b { "1" } else { "0" })),
            )?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn wall_coordinates<S: WallSpace>(space: &S, sample: &SampleSet<S::Point>) -> WallCoordinates<S::Wall> {
    let xs = sample.elements();
    let mut walls = BTreeSet::new();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            walls.extend(space.separating_walls(&xs[i], &xs[j]));
        }
    }
    let walls: Vec<S::Wall> = walls.into_iter().collect();
    let rows = xs
        .iter()
        .map(|x| walls.iter().map(|w| space.in_positive_half(w, x)).collect())
        .collect();
    WallCoordinates { walls, rows }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CndReport {
    pub pass: bool,
    pub min_eigenvalue: f64,
    pub dimension: usize,
    /// Tolerance after scaling by the largest entry.
    pub effective_tolerance: f64,
}

/// Conditional negative definiteness: `Σ cᵢcⱼDᵢⱼ <= 0` whenever `Σcᵢ = 0`,
/// equivalently `-½PDP` positive semidefinite. Passes when its smallest
/// eigenvalue is at least `-tol · max(1, max |Dᵢⱼ|)`.
pub fn cnd_check(d: &DistanceMatrix, tol: f64) -> Result<CndReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::BadTolerance);
    }
    d.validate()?;
    let scale = d.data.iter().copied().max().unwrap_or(0).max(1) as f64;
    let effective_tolerance = tol * scale;
    let min_eigenvalue = if d.dim == 0 {
        0.0
    } else {
        SymmetricEigen::new(d.centered()).eigenvalues.min()
    };
    Ok(CndReport {
        pass: min_eigenvalue >= -effective_tolerance,
        min_eigenvalue,
        dimension: d.dim,
        effective_tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::LampGroup;
    use crate::syntax::parse_element;
    use crate::wreath_walls::WreathWalls;

    fn sample(ww: &WreathWalls, items: &[&str]) -> SampleSet<crate::groups::WreathElement> {
        SampleSet::new(items.iter().map(|s| parse_element(s, ww.product()).unwrap()).collect()).unwrap()
    }

    fn z2() -> WreathWalls {
        WreathWalls::over_free(2, LampGroup::cyclic(2).unwrap()).unwrap()
    }

    #[test]
    fn singleton() {
        let ww = z2();
        let s = sample(&ww, &["{}|1"]);
        let coords = wall_coordinates(&ww, &s);
        assert!(coords.walls.is_empty());
        assert_eq!(coords.rows, vec![Vec::<bool>::new()]);
        let d = distance_matrix(&ww, &s);
        assert_eq!(d, DistanceMatrix::from_rows(vec![vec![0]]).unwrap());
        assert!(cnd_check(&d, 1e-9).unwrap().pass);
    }

    #[test]
    fn lamp_pair_coordinates() {
        let ww = z2();
        let s = sample(&ww, &["{}|1", "{a:1}|1"]);
        let coords = wall_coordinates(&ww, &s);
        assert_eq!(coords.walls.len(), 2);
        assert_eq!(coords.hamming(0, 1), 2);
    }

    #[test]
    fn translation_line() {
        let ww = z2();
        let s = sample(&ww, &["{}|1", "{}|a", "{}|ab"]);
        let d = distance_matrix(&ww, &s);
        assert_eq!(d, DistanceMatrix::from_rows(vec![vec![0, 2, 4], vec![2, 0, 2], vec![4, 2, 0]]).unwrap());
        assert_eq!(d.pseudometric_violation(), None);
        let report = cnd_check(&d, 1e-9).unwrap();
        assert!(report.pass, "{report:?}");
        assert_eq!(report.dimension, 3);
    }

    /// `max Σ cᵢcⱼDᵢⱼ` over integer zero-sum vectors with first two entries in
    /// -3..=3.
    fn worst_zero_sum_form(d: &[[i64; 3]; 3]) -> (i64, [i64; 3]) {
        let mut best = (i64::MIN, [0; 3]);
        for c0 in -3..=3 {
            for c1 in -3..=3 {
                let c = [c0, c1, -c0 - c1];
                let q: i64 = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| c[i] * c[j] * d[i][j]).sum();
                if q > best.0 {
                    best = (q, c);
                }
            }
        }
        best
    }

    #[test]
    fn strict_violator_found_by_search() {
        // [[0,1,4],..] is on the boundary: the best zero-sum form is exactly 0
        let boundary = [[0, 1, 4], [1, 0, 1], [4, 1, 0]];
        assert_eq!(worst_zero_sum_form(&boundary).0, 0);
        let violator = [[0, 1, 5], [1, 0, 1], [5, 1, 0]];
        let (q, _) = worst_zero_sum_form(&violator);
        assert_eq!(q, 2);

        let d = DistanceMatrix::from_rows(boundary.iter().map(|r| r.to_vec()).collect()).unwrap();
        assert!(cnd_check(&d, 1e-9).unwrap().pass);
        let d = DistanceMatrix::from_rows(violator.iter().map(|r| r.to_vec()).collect()).unwrap();
        let report = cnd_check(&d, 1e-9).unwrap();
        assert!(!report.pass);
        // Rayleigh quotient of c = (1,-2,1) gives -q/(2·6) as an upper bound
        assert!(report.min_eigenvalue <= -2.0 / 12.0 + 1e-12);
    }

    #[test]
    fn rejects_invalid_matrices() {
        let d = DistanceMatrix::from_rows(vec![vec![0, 1], vec![2, 0]]).unwrap();
        assert_eq!(cnd_check(&d, 1e-9), Err(Error::NotSymmetric(0, 1)));
        let d = DistanceMatrix::from_rows(vec![vec![0, -1], vec![-1, 0]]).unwrap();
        assert_eq!(cnd_check(&d, 1e-9), Err(Error::NegativeEntry(0, 1)));
        assert_eq!(DistanceMatrix::from_rows(vec![vec![0, 1]]), Err(Error::NotSquare));
        let d = DistanceMatrix::from_rows(vec![vec![0]]).unwrap();
        assert_eq!(cnd_check(&d, 0.0), Err(Error::BadTolerance));
    }

    #[test]
    fn duplicate_samples_rejected() {
        let ww = z2();
        let items = vec![
            parse_element("{}|aA", ww.product()).unwrap(),
            parse_element("{}|1", ww.product()).unwrap(),
        ];
        assert_eq!(SampleSet::new(items), Err(Error::DuplicateSample("{}|1".into())));
    }

    #[test]
    fn csv_export() {
        let ww = z2();
        let s = sample(&ww, &["{}|1", "{a:1}|1"]);
        let labels: Vec<String> = s.elements().iter().map(ToString::to_string).collect();
        let mut buf = Vec::new();
        distance_matrix(&ww, &s).write_csv(&labels, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "element,{}|1,{a:1}|1\n{}|1,0,2\n{a:1}|1,2,0\n");
        let mut buf = Vec::new();
        wall_coordinates(&ww, &s).write_csv(&labels, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "element,\"E(COCONE(a), {})\",\"E(COCONE(a), {a:1})\"\n{}|1,1,0\n{a:1}|1,0,1\n"
        );
    }
}
