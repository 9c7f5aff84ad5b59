use approx::assert_relative_eq;
use crease_core::crease::CreaseSpec;
use crease_core::math::{cos, sin, FRAC_PI_2, PI, TAU};
use crease_core::oracle::{angle_defect, crease_local_rates, crease_rate_estimate, gauss_map_integrate, gauss_map_patch, ParamRect};
use crease_core::surface::{
    gen_curved_crease, gen_cylinder, gen_gore_sphere, gen_mudguard, gen_twisted_patch, gen_twisted_prismatic_tube,
    CurvedCreaseBand, GoreSphereSpec, MudguardSpec, PrismaticTube,
};
use crease_core::{Error, TubeSpec, Vec3, VertexTag};

fn max_abs_interior_defect(mesh: &crease_core::TriMesh) -> f64 {
    let field = angle_defect(mesh).unwrap();
    (0..mesh.vertices.len())
        .filter(|&v| !field.boundary[v] && mesh.vertex_tags[v] == VertexTag::Interior)
        .map(|v| field.per_vertex_defect[v].abs())
        .fold(0.0, f64::max)
}

#[test]
fn cylinder_is_developable() {
    for alpha in [0.0, PI / 6.0, PI / 4.0, FRAC_PI_2] {
        let spec = TubeSpec::new(1.0, alpha, 0.2).unwrap();
        let mesh = gen_cylinder(spec, 48, 24).unwrap();
        assert_eq!(mesh.euler_characteristic(), 0);
        assert!(!mesh.is_closed());
        assert!(max_abs_interior_defect(&mesh) < 1e-12, "alpha {alpha}");
        let field = angle_defect(&mesh).unwrap();
        assert!(field.crease_defect().abs() < 1e-10);
        assert!(!mesh.creases.is_empty());
    }
}

#[test]
fn cylinder_creases_follow_helices() {
    let spec = TubeSpec::new(1.0, PI / 4.0, 0.3).unwrap();
    let mesh = gen_cylinder(spec, 64, 32).unwrap();
    assert_eq!(mesh.creases.len(), 15);
    for c in &mesh.creases {
        let pts: Vec<Vec3> = c.vertices.iter().map(|&v| mesh.vertices[v]).collect();
        // Constant pitch: dz / dphi = a / tan(alpha).
        for w in pts.windows(2) {
            let dphi = (w[0].x * w[1].y - w[0].y * w[1].x).atan2(w[0].x * w[1].x + w[0].y * w[1].y);
            assert_relative_eq!((w[1].z - w[0].z) / dphi, 1.0, max_relative = 1e-9);
        }
    }
}

#[test]
fn rejects_small_resolution() {
    let spec = TubeSpec::new(1.0, 0.3, 0.1).unwrap();
    assert!(matches!(gen_cylinder(spec, 2, 8), Err(Error::Resolution { .. })));
    assert!(gen_twisted_patch(0.1, 1.0, 1.0, 0.0, 8, 7).is_err());
    assert!(gen_gore_sphere(GoreSphereSpec { radius: 1.0, n: 2 }, 4, 4).is_err());
}

#[test]
fn tube_closure() {
    let spec = TubeSpec::for_strips(1.0, PI / 4.0, 12).unwrap();
    let mesh = gen_twisted_prismatic_tube(spec, 12, 48, 6).unwrap();
    assert_eq!(mesh.euler_characteristic(), 0);
    assert_eq!(mesh.creases.len(), 12);
    let tube = PrismaticTube::new(spec, 12).unwrap();
    // Strip k ends exactly on crease k + 1, including the wrap from the last strip.
    for k in 0..12 {
        for t in [0.0, 0.7, 2.0] {
            let end = tube.strip_point(k, t, 1.0);
            let on_next = tube.crease_point((k + 1) % 12, t - tube.ruling_shift());
            assert!((end - on_next).norm() < 1e-9);
        }
    }
    // Shared crease vertices: every vertex lies within 1e-9 of the cylinder or inside it.
    for v in &mesh.vertices {
        assert!(v.x.hypot(v.y) <= 1.0 + 1e-9);
    }

    let bad = TubeSpec::new(1.0, PI / 4.0, 0.4).unwrap();
    match PrismaticTube::new(bad, 12) {
        Err(Error::Closure { gap }) => assert_relative_eq!(gap, 12.0 * 0.4 / cos(PI / 4.0) - TAU, max_relative = 1e-12),
        other => panic!("{other:?}"),
    }
}

#[test]
fn axial_prism_is_flat() {
    let spec = TubeSpec::for_strips(1.0, 0.0, 8).unwrap();
    let mesh = gen_twisted_prismatic_tube(spec, 8, 16, 4).unwrap();
    assert!(max_abs_interior_defect(&mesh) < 1e-12);
    let field = angle_defect(&mesh).unwrap();
    assert!(field.total_defect.abs() < 1e-10);
}

#[test]
fn tube_strip_and_crease_balance() {
    for n in [12, 24, 48] {
        let spec = TubeSpec::for_strips(1.0, PI / 4.0, n).unwrap();
        let nv = 16;
        let mesh = gen_twisted_prismatic_tube(spec, n, 128, nv).unwrap();
        let field = angle_defect(&mesh).unwrap();
        assert!(field.interior_defect < 0.0);
        assert!(field.crease_defect() > 0.0);
        // Per unit crease length a crease cancels one strip. Crease vertices
        // also hold the strip curvature of their half rows, one row in total.
        let k = field.interior_curvature();
        for c in &field.creases {
            let fold = c.rate - k * spec.h / nv as f64;
            assert_relative_eq!(fold, -k * spec.h, max_relative = 0.01);
        }
    }
}

#[test]
fn twisted_patch_total_matches_surface() {
    // Flat crease: the total is that of z = 0.1 x y on the unit square.
    // Defects of the non-boundary vertices cover the square shrunk by half a cell.
    let mesh = gen_twisted_patch(0.1, 1.0, 1.0, 0.0, 64, 64).unwrap();
    let field = angle_defect(&mesh).unwrap();
    let e = 0.5 - 0.5 / 64.0;
    let oracle = gauss_map_integrate(|x, y| Vec3::new(x, y, 0.1 * x * y), ParamRect::new(-e, e, -e, e), 64, 64).unwrap();
    assert!(oracle.value < 0.0);
    assert_relative_eq!(field.total_defect, oracle.value, max_relative = 1e-3);
}

#[test]
fn untwisted_patch_has_no_curvature() {
    for mu in [0.0, 0.2] {
        let mesh = gen_twisted_patch(0.0, 1.0, 1.0, mu, 16, 16).unwrap();
        let field = angle_defect(&mesh).unwrap();
        assert!(field.total_defect.abs() < 1e-12);
    }
}

#[test]
fn straight_crease_carries_no_curvature() {
    let coarse = gen_twisted_patch(0.1, 1.0, 1.0, 0.2, 32, 32).unwrap();
    let fine = gen_twisted_patch(0.1, 1.0, 1.0, 0.2, 128, 128).unwrap();
    let rc = crease_rate_estimate(&coarse, 0).unwrap().abs();
    let rf = crease_rate_estimate(&fine, 0).unwrap().abs();
    assert!(rf < rc || rf < 1e-6, "{rc} -> {rf}");
    assert!(rf < 1e-3);
}

fn curved_rate(nu: usize, width: f64) -> f64 {
    let spec = CreaseSpec::curved(2.0, PI / 6.0).unwrap();
    let mesh = gen_curved_crease(spec, width, nu, (nu / 16).max(1)).unwrap();
    crease_rate_estimate(&mesh, 0).unwrap()
}

#[test]
fn curved_crease_converges() {
    let errs: Vec<f64> = [32, 64, 128].iter().map(|&n| (curved_rate(n, 0.1) - 0.5).abs()).collect();
    assert!(errs[1] <= errs[0] / 2.0 && errs[2] <= errs[1] / 2.0, "{errs:?}");
    assert!(errs[2] / 0.5 < 0.01);
}

#[test]
fn curved_crease_width_independent() {
    let wide = curved_rate(128, 0.2);
    let narrow = curved_rate(128, 0.1);
    assert_relative_eq!(wide, narrow, max_relative = 0.02);
}

#[test]
fn flat_curved_band_has_no_crease_curvature() {
    let spec = CreaseSpec::curved(2.0, 0.0).unwrap();
    let mesh = gen_curved_crease(spec, 0.2, 64, 4).unwrap();
    let field = angle_defect(&mesh).unwrap();
    assert!(field.total_defect.abs() < 1e-12);
    assert!(crease_rate_estimate(&mesh, 0).unwrap().abs() < 1e-12);
}

#[test]
fn curved_crease_local_rates_are_uniform() {
    let spec = CreaseSpec::curved(2.0, PI / 6.0).unwrap();
    let mesh = gen_curved_crease(spec, 0.1, 128, 8).unwrap();
    let field = angle_defect(&mesh).unwrap();
    let rates = crease_local_rates(&mesh, &field, 0).unwrap();
    assert_eq!(rates.len(), 128);
    for r in &rates {
        assert_relative_eq!(r.rate, rates[0].rate, max_relative = 1e-9);
    }
}

#[test]
fn curved_crease_gauss_map_patch() {
    // Corner normals straddle the crease, so the patch image is the crease's share.
    let band = CurvedCreaseBand::new(CreaseSpec::curved(2.0, 0.3).unwrap(), 0.1).unwrap();
    let dphi = 0.01;
    let s = gauss_map_patch(|phi, s| band.point(phi, s), 0.0, -0.05, dphi, 0.1).unwrap();
    assert!(s.signed_solid_angle > 0.0);
    assert_relative_eq!(s.signed_solid_angle, dphi * 2.0 * sin(0.3), max_relative = 1e-4);
}

#[test]
fn mudguard_defects_approach_surface_total() {
    // Non-boundary vertices see the band trimmed by half a cell on each side.
    let spec = MudguardSpec::new(10.0, 0.1, 0.2).unwrap();
    let exact = 4.0 * PI * sin(0.2);
    let mut last = f64::INFINITY;
    for nv in [8, 16, 32, 64] {
        let total = angle_defect(&gen_mudguard(spec, 256, nv).unwrap()).unwrap().total_defect;
        let trimmed = 4.0 * PI * sin(0.2 * (1.0 - 1.0 / nv as f64));
        assert_relative_eq!(total, trimmed, max_relative = 1e-3);
        let err = (total - exact).abs();
        assert!(err < last);
        last = err;
    }
}

#[test]
fn mudguard_gauss_map() {
    let spec = MudguardSpec::new(10.0, 0.1, 0.2).unwrap();
    let g = gauss_map_integrate(|p, e| spec.point(p, e), ParamRect::new(0.0, TAU, -0.2, 0.2), 256, 16).unwrap();
    assert_relative_eq!(g.value, 4.0 * PI * sin(0.2), max_relative = 1e-4);
    assert_relative_eq!(g.extrapolated, 4.0 * PI * sin(0.2), max_relative = 1e-6);
}

#[test]
fn whole_sphere_from_cube_faces() {
    let faces: [fn(f64, f64) -> Vec3; 6] = [
        |u, v| Vec3::new(u, v, 1.0).normalized().unwrap(),
        |u, v| Vec3::new(v, u, -1.0).normalized().unwrap(),
        |u, v| Vec3::new(1.0, u, v).normalized().unwrap(),
        |u, v| Vec3::new(-1.0, v, u).normalized().unwrap(),
        |u, v| Vec3::new(v, 1.0, u).normalized().unwrap(),
        |u, v| Vec3::new(u, -1.0, v).normalized().unwrap(),
    ];
    let total: f64 = faces
        .iter()
        .map(|f| gauss_map_integrate(f, ParamRect::new(-1.0, 1.0, -1.0, 1.0), 256, 256).unwrap().value)
        .sum();
    assert_relative_eq!(total, 4.0 * PI, max_relative = 1e-6);
}

#[test]
fn gore_sphere_gauss_bonnet_and_structure() {
    for (n, nu, nv) in [(3, 1, 2), (8, 4, 16), (16, 3, 31)] {
        let spec = GoreSphereSpec::new(1.5, n).unwrap();
        let mesh = gen_gore_sphere(spec, nu, nv).unwrap();
        assert!(mesh.is_closed());
        assert_eq!(mesh.euler_characteristic(), 2);
        let field = angle_defect(&mesh).unwrap();
        assert!((field.total_defect - 4.0 * PI).abs() <= 1e-9 * 4.0 * PI);
        assert!(max_abs_interior_defect(&mesh) < 1e-11);
        for v in mesh.creases.iter().flat_map(|c| &c.vertices) {
            assert_relative_eq!(mesh.vertices[*v].norm(), 1.5, max_relative = 1e-12);
        }
    }
}

#[test]
fn gore_equator_rate() {
    let spec = GoreSphereSpec::new(1.0, 8).unwrap();
    let mesh = gen_gore_sphere(spec, 4, 64).unwrap();
    let field = angle_defect(&mesh).unwrap();
    let rates = crease_local_rates(&mesh, &field, 0).unwrap();
    let eq = rates.iter().min_by(|a, b| (a.arc_position - FRAC_PI_2).abs().total_cmp(&(b.arc_position - FRAC_PI_2).abs())).unwrap();
    assert_relative_eq!(eq.rate, 2.0 * sin(PI / 8.0), max_relative = 0.01);
}
