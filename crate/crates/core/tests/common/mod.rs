//! Oracles shared by the integration tests. Nothing here calls the
//! bracket or the Conway reader.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use chebknot::PdCode;

type Corner = (usize, usize);

/// Faces of a PD code as lists of corners `(crossing, p)`, where corner
/// `p` sits between positions `p` and `p + 1`.
fn faces(pd: &[[u32; 4]]) -> (Vec<Vec<Corner>>, Vec<[usize; 4]>) {
    let mut ends: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (c, x) in pd.iter().enumerate() {
        for (p, &e) in x.iter().enumerate() {
            ends.entry(e).or_default().push((c, p));
        }
    }
    let mut face_of = vec![[usize::MAX; 4]; pd.len()];
    let mut out = Vec::new();
    for c0 in 0..pd.len() {
        for p0 in 0..4 {
            if face_of[c0][p0] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut face = Vec::new();
            let (mut c, mut p) = (c0, p0);
            while face_of[c][p] == usize::MAX {
                face_of[c][p] = id;
                face.push((c, p));
                // the face lies to the right of the edge at position p + 1;
                // at the far end that is the corner following the edge
                let q = (p + 1) % 4;
                let v = &ends[&pd[c][q]];
                let (c2, p2) = if v[0] == (c, q) { v[1] } else { v[0] };
                c = c2;
                p = p2;
            }
            out.push(face);
        }
    }
    (out, face_of)
}

fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Knot determinant from the Goeritz matrix of a checkerboard colouring.
pub fn goeritz_determinant(pd: &PdCode) -> u64 {
    let x = &pd.crossings;
    if x.is_empty() {
        return 1;
    }
    let (faces, face_of) = faces(x);
    assert_eq!(faces.len(), x.len() + 2, "not a connected planar diagram");

    // Adjacent corners at a crossing get opposite colours.
    let mut colour = vec![None; faces.len()];
    colour[0] = Some(0u8);
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        let cf = colour[f].unwrap();
        for &(c, p) in &faces[f] {
            for (q, want) in [((p + 1) % 4, 1 - cf), ((p + 2) % 4, cf), ((p + 3) % 4, 1 - cf)] {
                let g = face_of[c][q];
                match colour[g] {
                    None => {
                        colour[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(have) => assert_eq!(have, want, "diagram is not 2-colourable"),
                }
            }
        }
    }

    let white: Vec<usize> = (0..faces.len()).filter(|&f| colour[f] == Some(0)).collect();
    let index: HashMap<usize, usize> = white.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let m = white.len();
    let mut g = vec![vec![0i128; m]; m];
    for (c, corners) in face_of.iter().enumerate() {
        // Rotating the under strand counterclockwise sweeps corners 0 and 2.
        let (p, eta) = if colour[corners[0]] == Some(0) { (0, 1) } else { (1, -1) };
        let (i, j) = (index[&face_of[c][p]], index[&face_of[c][p + 2]]);
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
            g[i][i] += eta;
            g[j][j] += eta;
        }
    }
    let minor: Vec<Vec<i128>> = g[1..].iter().map(|row| row[1..].to_vec()).collect();
    bareiss_det(minor).unsigned_abs() as u64
}

/// Rows of the KnotInfo PD fixture.
pub fn knotinfo_pd_codes() -> Vec<(String, PdCode)> {
    let mut reader = csv::Reader::from_path(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/knotinfo_pd.csv"))
        .expect("fixture opens");
    reader
        .records()
        .map(|r| {
            let r = r.expect("fixture row");
            (r[0].to_string(), PdCode::parse(&r[1]).expect("fixture PD parses"))
        })
        .collect()
}
