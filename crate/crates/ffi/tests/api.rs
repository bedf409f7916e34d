use std::ffi::{CStr, CString};
use std::ptr;

use compactum_ffi::*;

fn group(json: &str) -> *mut CmGroup {
    let text = CString::new(json).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cm_group_from_json(text.as_ptr(), &mut g) }, CmStatus::Ok);
    g
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { cm_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cm_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn verify_z2_through_the_abi() {
    let g = group(r#"{"kind":"cyclic","n":2}"#);
    let (mut order, mut finite) = (0u64, false);
    assert_eq!(unsafe { cm_group_order(g, &mut order, &mut finite) }, CmStatus::Ok);
    assert_eq!((order, finite), (2, true));
    let mut cert = std::mem::MaybeUninit::<CmCertificate>::uninit();
    assert_eq!(unsafe { cm_verify_finite(g, 100_000, 1 << 14, cert.as_mut_ptr()) }, CmStatus::Ok);
    let cert = unsafe { cert.assume_init() };
    assert_eq!(cert.verdict, CmVerdict::Pass);
    assert!(cert.closed);
    assert_eq!(cert.order_presented, 2);
    unsafe { cm_group_free(g) };
}

#[test]
fn infinite_groups_are_refused_by_verify() {
    let g = group(r#"{"kind":"integers"}"#);
    let mut cert = std::mem::MaybeUninit::<CmCertificate>::uninit();
    assert_eq!(unsafe { cm_verify_finite(g, 10, 10, cert.as_mut_ptr()) }, CmStatus::InfiniteGroup);
    assert_eq!(last_error(), "finite verification requires finite group");
    let mut m = 0usize;
    assert_eq!(unsafe { cm_m_of(g, 1, 100_000, &mut m) }, CmStatus::Ok);
    assert!(m >= 1);
    unsafe { cm_group_free(g) };
}

#[test]
fn invalid_input_sets_status_and_message() {
    let mut g = ptr::null_mut();
    let bad = CString::new(r#"{"kind":"table","order":2,"table":[[1,0],[0,1]]}"#).unwrap();
    assert_eq!(unsafe { cm_group_from_json(bad.as_ptr(), &mut g) }, CmStatus::InvalidGroup);
    assert!(g.is_null());
    assert!(!last_error().is_empty());
    let syntax = CString::new("{").unwrap();
    assert_eq!(unsafe { cm_group_from_json(syntax.as_ptr(), &mut g) }, CmStatus::ParseError);
    assert_eq!(unsafe { cm_group_from_json(ptr::null(), &mut g) }, CmStatus::NullPointer);
    let mut order = 0u64;
    let mut finite = false;
    assert_eq!(unsafe { cm_group_order(ptr::null(), &mut order, &mut finite) }, CmStatus::NullPointer);
}

#[test]
fn presentation_and_scene_round_trip() {
    let g = group(r#"{"kind":"cyclic","n":2}"#);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { cm_presentation_text(g, 1, &mut text) }, CmStatus::Ok);
    assert_eq!(take(text), "gen 1 = e\ngen 2 = e\ngen 4 = e\nrel 1: g1\nrel 2: g1 g2\nrel 3: g1 g2 g4\n");

    let mut scene = ptr::null_mut();
    assert_eq!(unsafe { cm_scene_build(g, 6, CmComponent::K, 100_000, &mut scene) }, CmStatus::Ok);
    assert!(unsafe { cm_scene_len(scene) } > 0);
    let mut inside = false;
    assert_eq!(unsafe { cm_scene_contained(scene, &mut inside) }, CmStatus::Ok);
    assert!(inside);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { cm_scene_to_json(scene, &mut json) }, CmStatus::Ok);
    let json = take(json);
    let cjson = CString::new(json.clone()).unwrap();
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { cm_scene_from_json(cjson.as_ptr(), &mut again) }, CmStatus::Ok);
    let mut json2 = ptr::null_mut();
    assert_eq!(unsafe { cm_scene_to_json(again, &mut json2) }, CmStatus::Ok);
    assert_eq!(take(json2), json);

    let (half, one) = (CString::new("1/2").unwrap(), CString::new("1").unwrap());
    let mut svg = ptr::null_mut();
    let status = unsafe { cm_scene_slice_svg(scene, CmAxis::X3, half.as_ptr(), CmAxis::X4, one.as_ptr(), &mut svg) };
    assert_eq!(status, CmStatus::Ok);
    assert!(take(svg).contains("fill=\"#999999\""));
    let two = CString::new("2").unwrap();
    let status = unsafe { cm_scene_slice_svg(scene, CmAxis::X3, two.as_ptr(), CmAxis::X4, one.as_ptr(), &mut svg) };
    assert_eq!(status, CmStatus::GeometryError);
    assert_eq!(unsafe { cm_scene_project_svg(scene, CmAxis::X3, CmAxis::X4, &mut svg) }, CmStatus::Ok);
    assert!(take(svg).contains("<circle"));
    unsafe {
        cm_scene_free(scene);
        cm_scene_free(again);
        cm_group_free(g);
    }
}

#[test]
fn version_and_hash() {
    let v = unsafe { CStr::from_ptr(cm_version()) }.to_str().unwrap();
    assert!(v.starts_with("compactum "));
    let g = group(r#"{"kind":"cyclic","n":3}"#);
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { cm_group_hash(g, &mut h) }, CmStatus::Ok);
    assert_eq!(take(h).len(), 64);
    unsafe { cm_group_free(g) };
}
