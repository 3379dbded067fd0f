import numpy as np
import pytest

from swingcompare.compare import (
    SimilarityTransform,
    compare_frames,
    procrustes_fit,
    raw_mpjpe,
)
from swingcompare.data import Pose
from swingcompare.errors import DegeneratePose
from swingcompare.skeleton import BODY_PART_GROUPS, JOINT_INDEX, WHOLE_BODY

from oracles import random_pose_joints, random_rotation


def assert_proper_rotation(r, tol=1e-9):
    assert np.allclose(r.T @ r, np.eye(3), atol=tol)
    assert abs(np.linalg.det(r) - 1.0) < tol


def test_identity_fit():
    joints = random_pose_joints(np.random.default_rng(0))
    pose = Pose(joints)
    t = procrustes_fit(pose, pose)
    assert np.allclose(t.rotation, np.eye(3), atol=1e-12)
    assert np.allclose(t.translation, 0, atol=1e-12)
    assert t.scale == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(t.apply(joints), joints, atol=1e-12)


def test_recovers_synthesized_rigid_transform():
    rng = np.random.default_rng(1)
    joints = random_pose_joints(rng)
    rot = random_rotation(rng)
    moved = joints @ rot.T + np.array([1.0, 2.0, 3.0])
    t = procrustes_fit(Pose(joints), Pose(moved), with_scale=False)
    assert np.allclose(t.apply(moved), joints, atol=1e-9)
    assert t.scale == 1.0
    assert_proper_rotation(t.rotation)


def test_recover_transform_oracle_200_cases():
    rng = np.random.default_rng(2)
    for _ in range(200):
        joints = random_pose_joints(rng)
        rot = random_rotation(rng)
        translation = rng.uniform(-10, 10, size=3)
        scale = rng.uniform(0.5, 2.0)
        moved = scale * joints @ rot.T + translation
        t = procrustes_fit(Pose(joints), Pose(moved), with_scale=True)
        recovered = t.apply(moved)
        assert np.linalg.norm(recovered - joints, axis=1).mean() < 1e-9
        assert_proper_rotation(t.rotation)
        assert t.scale > 0


def test_transform_invariants_on_random_pairs():
    rng = np.random.default_rng(3)
    for _ in range(50):
        a = Pose(random_pose_joints(rng))
        b = Pose(random_pose_joints(rng))
        for with_scale in (True, False):
            t = procrustes_fit(a, b, with_scale=with_scale)
            assert_proper_rotation(t.rotation)
            assert t.scale > 0


def test_fit_is_optimal_against_random_transforms():
    rng = np.random.default_rng(4)
    for _ in range(10):
        ref = random_pose_joints(rng)
        mov = random_pose_joints(rng)
        t = procrustes_fit(Pose(ref), Pose(mov))
        best = ((t.apply(mov) - ref) ** 2).sum()
        for _ in range(100):
            r = random_rotation(rng)
            s = rng.uniform(0.5, 2.0)
            shift = rng.uniform(-5, 5, size=3)
            residual = ((s * mov @ r.T + shift - ref) ** 2).sum()
            assert best <= residual + 1e-9


def test_collinear_joints_give_valid_rotation_or_raise():
    line = np.zeros((17, 3))
    line[:, 0] = np.linspace(0, 1, 17)
    ref = random_pose_joints(np.random.default_rng(5))
    try:
        t = procrustes_fit(Pose(ref), Pose(line))
    except DegeneratePose:
        return
    assert_proper_rotation(t.rotation)


def test_coincident_joints_raise():
    point = np.ones((17, 3)) * 0.5
    ref = random_pose_joints(np.random.default_rng(6))
    with pytest.raises(DegeneratePose):
        procrustes_fit(Pose(ref), Pose(point))


# ---- frame comparison ----

def test_identical_poses_compare_to_zero():
    pose = Pose(random_pose_joints(np.random.default_rng(7)))
    c = compare_frames(pose, pose, latent_distance=0.3)
    assert c.mpjpe < 1e-12
    assert (c.per_joint_error < 1e-12).all()
    assert c.latent_distance == 0.3


def test_translation_absorbed_but_raw_mpjpe_sees_it():
    joints = random_pose_joints(np.random.default_rng(8))
    offset = joints + np.array([3.0, 4.0, 0.0])
    assert raw_mpjpe(Pose(joints), Pose(offset)) == pytest.approx(5.0, abs=1e-12)
    c = compare_frames(Pose(joints), Pose(offset), latent_distance=0.0)
    assert c.mpjpe < 1e-9


def test_compare_never_beats_raw_on_rigid_perturbations():
    rng = np.random.default_rng(9)
    for _ in range(30):
        user = random_pose_joints(rng)
        expert = user + rng.normal(scale=0.05, size=user.shape)
        rigid = expert @ random_rotation(rng).T + rng.uniform(-2, 2, 3)
        fitted = compare_frames(Pose(user), Pose(rigid), 0.0).mpjpe
        assert fitted <= raw_mpjpe(Pose(user), Pose(rigid)) + 1e-12


def test_mpjpe_invariant_to_similarity_transform_of_expert():
    rng = np.random.default_rng(10)
    user = Pose(random_pose_joints(rng))
    expert = Pose(random_pose_joints(rng))
    base = compare_frames(user, expert, 0.0).mpjpe
    for _ in range(10):
        s = rng.uniform(0.5, 2.0)
        r = random_rotation(rng)
        shift = rng.uniform(-10, 10, 3)
        moved = Pose(s * expert.joints @ r.T + shift)
        assert compare_frames(user, moved, 0.0).mpjpe == pytest.approx(base, abs=1e-9)


def test_mpjpe_invariant_to_rigid_transform_without_scale():
    rng = np.random.default_rng(11)
    user = Pose(random_pose_joints(rng))
    expert = Pose(random_pose_joints(rng))
    base = compare_frames(user, expert, 0.0, with_scale=False).mpjpe
    for _ in range(10):
        r = random_rotation(rng)
        shift = rng.uniform(-10, 10, 3)
        moved = Pose(expert.joints @ r.T + shift)
        got = compare_frames(user, moved, 0.0, with_scale=False).mpjpe
        assert got == pytest.approx(base, abs=1e-9)


def test_group_errors_are_member_means():
    rng = np.random.default_rng(12)
    c = compare_frames(Pose(random_pose_joints(rng)), Pose(random_pose_joints(rng)), 0.1)
    assert c.mpjpe == pytest.approx(c.per_joint_error.mean(), rel=1e-12)
    for name, members in BODY_PART_GROUPS.items():
        idx = [JOINT_INDEX[m] for m in members]
        assert c.per_group_error[name] == pytest.approx(
            c.per_joint_error[idx].mean(), rel=1e-12)
    assert c.per_group_error[WHOLE_BODY] == c.mpjpe


def test_raw_mpjpe_two_joint_hand_check():
    # mean of norms, worked by hand on two joints: ||(1,0,0)|| and ||(0,2,0)||
    a = np.zeros((17, 3))
    b = np.zeros((17, 3))
    b[0, 0] = 1.0
    b[1, 1] = 2.0
    assert raw_mpjpe(Pose(a), Pose(b)) == pytest.approx((1.0 + 2.0) / 17, rel=1e-15)


def test_raw_mpjpe_identity_zero():
    pose = Pose(random_pose_joints(np.random.default_rng(13)))
    assert raw_mpjpe(pose, pose) == 0.0
