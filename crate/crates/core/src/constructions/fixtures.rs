use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] =
    &["point", "edge", "triangle", "hollow-triangle", "cycle4", "octahedron", "example13", "rp2"];

/// The 2-ample complex on `Z/13`: edges join vertices differing by ±1, ±3
/// or ±4, and the filled triangles are `{i, i+1, i+4}`.
pub fn example_thirteen() -> SimplicialComplex {
    let mut maximal: Vec<Vec<Vertex>> = Vec::new();
    for i in 0..13u32 {
        for d in [1, 3, 4] {
            maximal.push(vec![i, (i + d) % 13]);
        }
        maximal.push(vec![i, (i + 1) % 13, (i + 4) % 13]);
    }
    SimplicialComplex::from_maximal(maximal).expect("valid fixture")
}

/// Join of `k` copies of `S⁰`; copy `i` has vertices `2i` and `2i + 1`.
/// The result is a triangulated `(k−1)`-sphere with `2k` vertices.
pub fn sphere_join(k: usize) -> Result<SimplicialComplex> {
    if k == 0 {
        return Err(Error::InvalidParameters("sphere_join needs at least one copy of S⁰".into()));
    }
    let mut out = SimplicialComplex::from_maximal([[0u32], [1]])?;
    for i in 1..k as Vertex {
        let s0 = SimplicialComplex::from_maximal([[2 * i], [2 * i + 1]])?;
        out = out.join(&s0)?;
    }
    Ok(out)
}

pub fn octahedron() -> SimplicialComplex {
    sphere_join(3).expect("k = 3")
}

/// Six-vertex triangulation of the real projective plane (the quotient of
/// the icosahedron by the antipodal map).
pub fn projective_plane() -> SimplicialComplex {
    let faces: [[Vertex; 3]; 10] = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [2, 3, 5],
        [1, 3, 4],
        [2, 4, 5],
        [1, 3, 5],
    ];
    SimplicialComplex::from_maximal(faces).expect("valid fixture")
}

/// Named small complexes for tests and the command line.
pub fn builtin(name: &str) -> Option<SimplicialComplex> {
    let cx = |m: &[&[Vertex]]| SimplicialComplex::from_maximal(m.iter().map(|s| s.to_vec())).expect("valid fixture");
    Some(match name {
        "point" => cx(&[&[0]]),
        "edge" => cx(&[&[0, 1]]),
        "triangle" => cx(&[&[0, 1, 2]]),
        "hollow-triangle" => cx(&[&[0, 1], &[1, 2], &[0, 2]]),
        "cycle4" => sphere_join(2).expect("k = 2"),
        "octahedron" => octahedron(),
        "example13" => example_thirteen(),
        "rp2" => projective_plane(),
        _ => return None,
    })
}
