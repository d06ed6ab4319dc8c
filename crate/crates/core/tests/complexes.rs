use nu_tamari_core::complexes::{
    asso_f_vector, asso_faces_by_definition, enumerate_asso_faces, tc_f_vector,
};
use nu_tamari_core::paths::NuPath;
use nu_tamari_core::poly::BigInt;
use nu_tamari_core::triangles::{
    f_triangle, h_triangle, verify_f_fvector, verify_fh, verify_h_hvector, verify_interior_duality,
    verify_reciprocity,
};

fn words_up_to(max: usize) -> Vec<NuPath> {
    (1..=max)
        .flat_map(|len| {
            (0u32..1 << len).map(move |m| {
                (0..len)
                    .map(|i| if m >> i & 1 == 1 { 'E' } else { 'N' })
                    .collect::<String>()
                    .parse()
                    .unwrap()
            })
        })
        .collect()
}

#[test]
fn both_face_routes_agree() {
    for nu in words_up_to(7) {
        assert_eq!(
            enumerate_asso_faces(&nu),
            asso_faces_by_definition(&nu),
            "{nu}"
        );
    }
}

#[test]
fn f_at_one_counts_faces_and_h_at_one_counts_paths() {
    for nu in words_up_to(8) {
        let faces = enumerate_asso_faces(&nu);
        assert_eq!(
            f_triangle(&nu).eval_at_ones(),
            BigInt::from(faces.len()),
            "{nu}"
        );
        let paths = nu_tamari_core::paths::enumerate_nu_paths(&nu).len();
        assert_eq!(h_triangle(&nu).eval_at_ones(), BigInt::from(paths), "{nu}");
    }
}

#[test]
fn face_vector_identities() {
    for nu in words_up_to(8) {
        assert!(verify_f_fvector(&nu), "{nu}");
        assert!(verify_h_hvector(&nu), "{nu}");
        assert!(verify_interior_duality(&nu), "{nu}");
        assert!(verify_reciprocity(&nu), "{nu}");
    }
}

#[test]
fn worked_examples() {
    let nu: NuPath = "ENEENEN".parse().unwrap();
    assert_eq!(
        asso_f_vector(&enumerate_asso_faces(&nu)).by_dimension(),
        [23, 39, 20, 3]
    );
    assert_eq!(tc_f_vector(&"EENEN".parse().unwrap()).f.len() - 2, 5);
    assert_eq!(tc_f_vector(&nu).f.len() - 2, 7);
    assert!(verify_fh(&nu).all_hold());
}

#[test]
fn staircases() {
    for n in 1..=4 {
        let nu: NuPath = "EN".repeat(n).parse().unwrap();
        assert!(verify_fh(&nu).all_hold(), "{nu}");
    }
}

#[test]
fn degree_bounds() {
    for nu in words_up_to(7) {
        let r = verify_fh(&nu);
        assert_eq!(r.f.total_degree(), Some(r.deg as u32), "{nu}");
        assert_eq!(
            r.h.total_degree().map(|d| d <= 2 * r.deg as u32),
            Some(true),
            "{nu}"
        );
        assert_eq!(r.h.degree_in(0), Some(r.deg as u32), "{nu}");
    }
}
