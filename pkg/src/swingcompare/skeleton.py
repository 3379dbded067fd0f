"""The 17-joint skeleton schema and the body-part groups built on it.

Joint order follows the common 3D-lifting convention (pelvis-rooted,
right leg / left leg / torso / left arm / right arm). All pose arrays in
this package store joints in exactly this order; loaders reorder by name
on the way in.
"""

from __future__ import annotations

JOINT_NAMES: tuple[str, ...] = (
    "pelvis",
    "r_hip",
    "r_knee",
    "r_ankle",
    "l_hip",
    "l_knee",
    "l_ankle",
    "spine",
    "thorax",
    "neck",
    "head",
    "l_shoulder",
    "l_elbow",
    "l_wrist",
    "r_shoulder",
    "r_elbow",
    "r_wrist",
)

JOINT_COUNT = len(JOINT_NAMES)

JOINT_INDEX: dict[str, int] = {name: i for i, name in enumerate(JOINT_NAMES)}

PELVIS = JOINT_INDEX["pelvis"]

WHOLE_BODY = "WholeBody"

# The nine named part groups used for per-part error aggregation and the
# correlation tables. Pelvis and thorax belong only to the whole body.
BODY_PART_GROUPS: dict[str, tuple[str, ...]] = {
    "Wrist": ("l_wrist", "r_wrist"),
    "Elbow": ("l_elbow", "r_elbow"),
    "Shoulder": ("l_shoulder", "r_shoulder"),
    "Neck": ("neck",),
    "Head": ("head",),
    "Spine": ("spine",),
    "Knee": ("l_knee", "r_knee"),
    "Foot": ("l_ankle", "r_ankle"),
    "Hip": ("l_hip", "r_hip"),
}

GROUP_INDICES: dict[str, tuple[int, ...]] = {
    name: tuple(JOINT_INDEX[j] for j in members)
    for name, members in BODY_PART_GROUPS.items()
}

# Upper/lower split used by the synthetic-data experiments.
UPPER_BODY_GROUPS: tuple[str, ...] = ("Wrist", "Elbow", "Shoulder", "Neck", "Head", "Spine")
LOWER_BODY_GROUPS: tuple[str, ...] = ("Hip", "Knee", "Foot")

# Joint-level split for the swing generator's amplitude scaling. The
# pelvis rides with the lower body; thorax with the upper.
UPPER_BODY_JOINTS: tuple[str, ...] = (
    "spine", "thorax", "neck", "head",
    "l_shoulder", "l_elbow", "l_wrist",
    "r_shoulder", "r_elbow", "r_wrist",
)
LOWER_BODY_JOINTS: tuple[str, ...] = (
    "pelvis", "r_hip", "r_knee", "r_ankle", "l_hip", "l_knee", "l_ankle",
)

# Bone connectivity, for renderers only.
BONES: tuple[tuple[str, str], ...] = (
    ("pelvis", "r_hip"), ("r_hip", "r_knee"), ("r_knee", "r_ankle"),
    ("pelvis", "l_hip"), ("l_hip", "l_knee"), ("l_knee", "l_ankle"),
    ("pelvis", "spine"), ("spine", "thorax"), ("thorax", "neck"), ("neck", "head"),
    ("thorax", "l_shoulder"), ("l_shoulder", "l_elbow"), ("l_elbow", "l_wrist"),
    ("thorax", "r_shoulder"), ("r_shoulder", "r_elbow"), ("r_elbow", "r_wrist"),
)


def group_members(name: str) -> tuple[str, ...]:
    """Members of a group; ``WholeBody`` resolves to all 17 joints."""
    if name == WHOLE_BODY:
        return JOINT_NAMES
    return BODY_PART_GROUPS[name]
