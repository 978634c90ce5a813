//! Deterministic constructors for the test corpus: simplices, sphere
//! boundaries, the 6-vertex projective plane, combinators, and seeded
//! random complexes.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::Complex;
use crate::homology::homology_profile;
use crate::linalg::FieldSpec;

/// Parameters of one reproducible random complex. Generation is a pure
/// function of the spec: identical specs give structurally identical
/// complexes. The generator is ChaCha8 seeded through
/// `SeedableRng::seed_from_u64`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RandomSpec {
    pub n_vertices: u32,
    pub max_dim: u32,
    pub facet_count: u32,
    pub seed: u64,
}

/// The full n-simplex on n+1 vertices (labels "0" ..= "n").
pub fn simplex(n: i64) -> Complex {
    assert!(n >= 0, "simplex dimension must be >= 0");
    let facet: Vec<String> = (0..=n).map(|v| v.to_string()).collect();
    Complex::from_facets(&[facet])
}

/// The boundary of the n-simplex: all n+1 facets of dimension n−1,
/// a triangulation of the sphere S^{n−1}.
pub fn boundary_simplex(n: i64) -> Complex {
    assert!(n >= 1, "boundary requires a simplex of dimension >= 1");
    let mut facets = Vec::with_capacity((n + 1) as usize);
    for skip in 0..=n {
        facets.push(
            (0..=n)
                .filter(|v| *v != skip)
                .map(|v| v.to_string())
                .collect::<Vec<_>>(),
        );
    }
    Complex::from_facets(&facets)
}

/// The 6-vertex, 10-facet triangulation of the real projective plane,
/// built as the antipodal quotient of the icosahedron boundary and
/// self-validated by its homology: over GF(2) the reduced Betti numbers in
/// degrees (0, 1, 2) must be (0, 1, 1), over Q all must vanish.
pub fn rp2_minimal() -> Complex {
    // Icosahedron: poles 0 (north) and 11 (south), upper ring u_i = 1+i,
    // lower ring l_i = 6+i, i mod 5, with the lower ring offset half a step.
    let u = |i: i64| 1 + i.rem_euclid(5);
    let l = |i: i64| 6 + i.rem_euclid(5);
    let mut ico: Vec<[i64; 3]> = Vec::with_capacity(20);
    for i in 0..5 {
        ico.push([0, u(i), u(i + 1)]);
        ico.push([11, l(i), l(i + 1)]);
        ico.push([u(i), u(i + 1), l(i)]);
        ico.push([u(i + 1), l(i), l(i + 1)]);
    }
    // Antipodal involution: 0 <-> 11, u_i <-> l_{i+2}; vertex classes are
    // 0 for the poles and i+1 for the pair {u_i, l_{i+2}}.
    let class = |v: i64| -> i64 {
        match v {
            0 | 11 => 0,
            1..=5 => v,                      // u_{v-1} -> class v
            _ => (v - 6 - 2).rem_euclid(5) + 1, // l_j pairs with u_{j-2}
        }
    };
    let facets: Vec<Vec<String>> = ico
        .iter()
        .map(|t| t.iter().map(|v| class(*v).to_string()).collect())
        .collect();
    let k = Complex::from_facets(&facets);

    assert_eq!(k.n_vertices(), 6, "projective plane has 6 vertices");
    assert_eq!(k.facets().len(), 10, "projective plane has 10 triangles");
    assert_eq!(k.face_count(1), 15, "projective plane has 15 edges");
    let char2 = homology_profile(&k, &FieldSpec::prime(2).expect("2 is prime"));
    assert_eq!(
        (char2.betti(0), char2.betti(1), char2.betti(2)),
        (0, 1, 1),
        "projective plane homology over GF(2)"
    );
    let char0 = homology_profile(&k, &FieldSpec::rationals());
    assert!(
        char0.is_acyclic(),
        "projective plane is acyclic over the rationals"
    );
    k
}

/// Picks a vertex label not used by the complex.
fn fresh_label(k: &Complex, base: &str) -> String {
    if !k.labels().iter().any(|l| l == base) {
        return base.to_string();
    }
    let mut i = 1u64;
    loop {
        let cand = format!("{base}{i}");
        if !k.labels().iter().any(|l| *l == cand) {
            return cand;
        }
        i += 1;
    }
}

/// The cone over K with a fresh apex vertex; acyclic in every degree.
/// The cone over the void complex is a single point.
pub fn cone(k: &Complex) -> Complex {
    let apex = fresh_label(k, "apex");
    if k.is_void() {
        return Complex::from_facets(&[vec![apex]]);
    }
    let facets: Vec<Vec<String>> = k
        .facets()
        .iter()
        .map(|f| {
            let mut labels = k.face_labels(f);
            labels.push(apex.clone());
            labels
        })
        .collect();
    Complex::from_facets(&facets)
}

/// Disjoint union; both operands are relabeled ("a:" and "b:" prefixes)
/// so arbitrary inputs never collide.
pub fn disjoint_union(k: &Complex, l: &Complex) -> Complex {
    let mut facets: Vec<Vec<String>> = Vec::new();
    for f in k.facets() {
        facets.push(k.face_labels(f).iter().map(|s| format!("a:{s}")).collect());
    }
    for f in l.facets() {
        facets.push(l.face_labels(f).iter().map(|s| format!("b:{s}")).collect());
    }
    Complex::from_facets(&facets)
}

/// The join K * L: facets are unions of one facet from each side, with the
/// same relabeling scheme as the disjoint union. Operands must be non-void;
/// `{∅}` is the identity.
pub fn join(k: &Complex, l: &Complex) -> Complex {
    assert!(
        !k.is_void() && !l.is_void(),
        "join operands must be non-void"
    );
    let mut facets: Vec<Vec<String>> = Vec::new();
    for f in k.facets() {
        for g in l.facets() {
            let mut labels: Vec<String> =
                k.face_labels(f).iter().map(|s| format!("a:{s}")).collect();
            labels.extend(l.face_labels(g).iter().map(|s| format!("b:{s}")));
            facets.push(labels);
        }
    }
    Complex::from_facets(&facets)
}

/// Deterministic pseudo-random facet antichain. Draws `facet_count` faces
/// of dimension up to `max_dim`; a draw dominated by an already kept facet
/// is retried a fixed number of times and then dropped, so the result may
/// have fewer facets than requested.
pub fn random_complex(spec: &RandomSpec) -> Complex {
    assert!(spec.facet_count >= 1, "facet_count must be >= 1");
    assert!(
        spec.max_dim < spec.n_vertices,
        "max_dim must be < n_vertices"
    );
    const RETRIES: u32 = 16;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for _ in 0..spec.facet_count {
        let mut drawn: Option<Vec<u32>> = None;
        for _ in 0..RETRIES {
            let fdim = rng.gen_range(0..=spec.max_dim);
            let mut verts: Vec<u32> = sample(&mut rng, spec.n_vertices as usize, fdim as usize + 1)
                .into_iter()
                .map(|v| v as u32)
                .collect();
            verts.sort_unstable();
            let dominated = facets
                .iter()
                .any(|g| verts.iter().all(|v| g.binary_search(v).is_ok()));
            if !dominated {
                drawn = Some(verts);
                break;
            }
        }
        if let Some(verts) = drawn {
            facets.retain(|g| !g.iter().all(|v| verts.binary_search(v).is_ok()));
            facets.push(verts);
        }
    }
    let raw: Vec<Vec<String>> = facets
        .iter()
        .map(|f| f.iter().map(|v| v.to_string()).collect())
        .collect();
    Complex::from_facets(&raw)
}
