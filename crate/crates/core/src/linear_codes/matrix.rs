//! Gaussian elimination over a field of the tower.

use crate::algebra::{Fe, FieldSpec};

/// Reduce `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub(crate) fn rref(field: &FieldSpec, rows: &mut Vec<Vec<Fe>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][col]).unwrap();
        if inv != Fe::ONE {
            for x in rows[r].iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = field.neg(row[col]);
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !y.is_zero() {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(field: &FieldSpec, rows: &[Vec<Fe>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Residual of `v` after elimination against an RREF basis.
pub(crate) fn reduce(field: &FieldSpec, basis: &[Vec<Fe>], pivots: &[usize], v: &[Fe]) -> Vec<Fe> {
    let mut out = v.to_vec();
    for (row, &p) in basis.iter().zip(pivots) {
        let c = out[p];
        if c.is_zero() {
            continue;
        }
        let c = field.neg(c);
        for (x, &y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *x = field.add(*x, field.mul(c, y));
            }
        }
    }
    out
}

/// Coordinates of `v` in an RREF basis, if `v` lies in its span.
pub(crate) fn coordinates(field: &FieldSpec, basis: &[Vec<Fe>], pivots: &[usize], v: &[Fe]) -> Option<Vec<Fe>> {
    if !reduce(field, basis, pivots, v).iter().all(|x| x.is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&p| v[p]).collect())
}

pub(crate) fn mul_transpose(field: &FieldSpec, a: &[Vec<Fe>], b: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    a.iter()
        .map(|ra| b.iter().map(|rb| dot(field, ra, rb)).collect())
        .collect()
}

pub(crate) fn dot(field: &FieldSpec, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter()
        .zip(b)
        .fold(Fe::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// Inverse of a square matrix, `None` if singular.
pub(crate) fn inverse(field: &FieldSpec, m: &[Vec<Fe>]) -> Option<Vec<Vec<Fe>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Fe>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }));
            r
        })
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
