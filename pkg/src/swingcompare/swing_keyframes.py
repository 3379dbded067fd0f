"""Keyframe skeletons for the synthetic swing generator.

Nine committed poses: one per swing phase (address through finish) plus
a terminal rest pose so the final phase still moves. Units are meters,
y up, ball side toward +x, target toward +z; framing is camera-tracked,
so the 17-joint centroid sits at the same point in every keyframe.
The spine bows against the upper column (an S-bend), as a lumbar
counter-curve. These constants are a frozen fixture: tests and goldens
depend on the numbers here, not on how they were authored.
"""

KEYFRAME_PHASES = (
    "address",
    "toe_up",
    "mid_backswing",
    "top",
    "mid_downswing",
    "impact",
    "mid_follow_through",
    "finish",
    "rest",
)

# (9 keyframes) x (17 joints) x xyz, meters; schema joint order.
KEYFRAME_JOINTS = (
    (  # address
        [-0.168, 1.020, -0.000],  # pelvis
        [-0.168, 1.040, -0.110],  # r_hip
        [-0.088, 0.595, -0.155],  # r_knee
        [-0.148, 0.150, -0.200],  # r_ankle
        [-0.168, 1.000, 0.110],  # l_hip
        [-0.088, 0.575, 0.155],  # l_knee
        [-0.148, 0.150, 0.200],  # l_ankle
        [-0.079, 1.221, -0.000],  # spine
        [0.011, 1.422, -0.000],  # thorax
        [0.059, 1.531, -0.000],  # neck
        [0.127, 1.633, -0.000],  # head
        [0.011, 1.422, 0.190],  # l_shoulder
        [0.148, 1.098, 0.119],  # l_elbow
        [0.245, 0.877, -0.000],  # l_wrist
        [0.011, 1.422, -0.190],  # r_shoulder
        [0.166, 1.055, -0.116],  # r_elbow
        [0.279, 0.794, -0.000],  # r_wrist
    ),
    (  # toe_up
        [-0.150, 0.970, 0.100],  # pelvis
        [-0.127, 0.990, -0.008],  # r_hip
        [-0.058, 0.545, -0.034],  # r_knee
        [-0.120, 0.100, -0.060],  # r_ankle
        [-0.173, 0.950, 0.208],  # l_hip
        [-0.081, 0.525, 0.274],  # l_knee
        [-0.120, 0.100, 0.340],  # l_ankle
        [-0.047, 1.168, 0.141],  # spine
        [0.019, 1.374, 0.070],  # thorax
        [0.061, 1.485, 0.048],  # neck
        [0.123, 1.588, 0.031],  # head
        [-0.073, 1.415, 0.231],  # l_shoulder
        [0.059, 1.214, -0.122],  # l_elbow
        [0.187, 1.064, -0.366],  # l_wrist
        [0.111, 1.333, -0.091],  # r_shoulder
        [0.178, 1.157, -0.321],  # r_elbow
        [0.211, 1.022, -0.442],  # r_wrist
    ),
    (  # mid_backswing
        [-0.107, 0.884, 0.122],  # pelvis
        [-0.062, 0.904, 0.022],  # r_hip
        [-0.005, 0.459, 0.013],  # r_knee
        [-0.067, 0.014, 0.004],  # r_ankle
        [-0.152, 0.864, 0.223],  # l_hip
        [-0.050, 0.436, 0.313],  # l_knee
        [-0.067, 0.009, 0.402],  # l_ankle
        [0.021, 1.071, 0.211],  # spine
        [0.044, 1.296, 0.057],  # thorax
        [0.072, 1.412, 0.010],  # neck
        [0.124, 1.519, -0.025],  # head
        [-0.109, 1.364, 0.147],  # l_shoulder
        [-0.055, 1.407, -0.186],  # l_elbow
        [0.048, 1.385, -0.431],  # l_wrist
        [0.197, 1.227, -0.032],  # r_shoulder
        [0.127, 1.337, -0.332],  # r_elbow
        [0.042, 1.413, -0.517],  # r_wrist
    ),
    (  # top
        [-0.066, 0.818, 0.067],  # pelvis
        [0.001, 0.838, -0.020],  # r_hip
        [0.043, 0.390, -0.025],  # r_knee
        [-0.016, -0.057, -0.030],  # r_ankle
        [-0.134, 0.798, 0.153],  # l_hip
        [-0.024, 0.365, 0.260],  # l_knee
        [-0.016, -0.067, 0.367],  # l_ankle
        [0.088, 0.989, 0.196],  # spine
        [0.065, 1.242, -0.028],  # thorax
        [0.079, 1.367, -0.098],  # neck
        [0.120, 1.481, -0.150],  # head
        [-0.109, 1.319, -0.035],  # l_shoulder
        [-0.127, 1.523, -0.120],  # l_elbow
        [-0.082, 1.630, -0.179],  # l_wrist
        [0.238, 1.164, -0.022],  # r_shoulder
        [0.054, 1.494, -0.132],  # r_elbow
        [-0.114, 1.710, -0.205],  # r_wrist
    ),
    (  # mid_downswing
        [-0.145, 0.939, 0.129],  # pelvis
        [-0.134, 0.959, 0.020],  # r_hip
        [-0.054, 0.529, -0.033],  # r_knee
        [-0.125, 0.098, -0.087],  # r_ankle
        [-0.157, 0.919, 0.239],  # l_hip
        [-0.066, 0.502, 0.274],  # l_knee
        [-0.125, 0.084, 0.309],  # l_ankle
        [-0.062, 1.151, 0.184],  # spine
        [0.039, 1.334, 0.089],  # thorax
        [0.091, 1.438, 0.060],  # neck
        [0.161, 1.535, 0.038],  # head
        [-0.077, 1.385, 0.230],  # l_shoulder
        [0.022, 1.288, -0.150],  # l_elbow
        [0.147, 1.178, -0.413],  # l_wrist
        [0.155, 1.282, -0.052],  # r_shoulder
        [0.171, 1.216, -0.335],  # r_elbow
        [0.160, 1.163, -0.501],  # r_wrist
    ),
    (  # impact
        [-0.183, 1.022, -0.010],  # pelvis
        [-0.213, 1.042, -0.116],  # r_hip
        [-0.118, 0.624, -0.210],  # r_knee
        [-0.183, 0.206, -0.303],  # r_ankle
        [-0.152, 1.002, 0.095],  # l_hip
        [-0.087, 0.592, 0.092],  # l_knee
        [-0.183, 0.182, 0.090],  # l_ankle
        [-0.134, 1.248, -0.058],  # spine
        [0.027, 1.406, 0.025],  # thorax
        [0.097, 1.503, 0.050],  # neck
        [0.181, 1.594, 0.070],  # head
        [0.045, 1.398, 0.214],  # l_shoulder
        [0.173, 1.081, 0.164],  # l_elbow
        [0.258, 0.862, 0.061],  # l_wrist
        [0.009, 1.414, -0.164],  # r_shoulder
        [0.170, 1.042, -0.065],  # r_elbow
        [0.292, 0.779, 0.067],  # r_wrist
    ),
    (  # mid_follow_through
        [-0.103, 0.904, -0.144],  # pelvis
        [-0.190, 0.924, -0.212],  # r_hip
        [-0.077, 0.496, -0.348],  # r_knee
        [-0.088, 0.068, -0.484],  # r_ankle
        [-0.017, 0.884, -0.076],  # l_hip
        [0.010, 0.459, -0.085],  # l_knee
        [-0.088, 0.034, -0.094],  # l_ankle
        [0.013, 1.089, -0.301],  # spine
        [0.056, 1.318, -0.029],  # thorax
        [0.090, 1.437, 0.054],  # neck
        [0.147, 1.545, 0.117],  # head
        [0.221, 1.245, 0.030],  # l_shoulder
        [0.137, 1.268, 0.315],  # l_elbow
        [0.037, 1.284, 0.482],  # l_wrist
        [-0.109, 1.392, -0.088],  # r_shoulder
        [-0.066, 1.359, 0.293],  # r_elbow
        [0.028, 1.291, 0.571],  # r_wrist
    ),
    (  # finish
        [-0.052, 0.802, -0.072],  # pelvis
        [-0.161, 0.822, -0.084],  # r_hip
        [-0.043, 0.382, -0.271],  # r_knee
        [0.003, -0.058, -0.459],  # r_ankle
        [0.057, 0.782, -0.061],  # l_hip
        [0.066, 0.339, -0.067],  # l_knee
        [0.003, -0.103, -0.072],  # l_ankle
        [0.126, 0.941, -0.312],  # spine
        [0.062, 1.249, 0.103],  # thorax
        [0.064, 1.391, 0.231],  # neck
        [0.095, 1.517, 0.326],  # head
        [0.223, 1.177, 0.032],  # l_shoulder
        [0.050, 1.474, 0.081],  # l_elbow
        [-0.105, 1.652, 0.139],  # l_wrist
        [-0.099, 1.321, 0.174],  # r_shoulder
        [-0.151, 1.578, 0.168],  # r_elbow
        [-0.140, 1.734, 0.145],  # r_wrist
    ),
    (  # rest
        [-0.059, 0.815, -0.110],  # pelvis
        [-0.167, 0.835, -0.133],  # r_hip
        [-0.048, 0.396, -0.310],  # r_knee
        [-0.009, -0.042, -0.487],  # r_ankle
        [0.048, 0.795, -0.087],  # l_hip
        [0.060, 0.355, -0.094],  # l_knee
        [-0.009, -0.085, -0.100],  # l_ankle
        [0.105, 0.958, -0.335],  # spine
        [0.065, 1.259, 0.055],  # thorax
        [0.074, 1.400, 0.175],  # neck
        [0.111, 1.524, 0.265],  # head
        [0.235, 1.184, 0.015],  # l_shoulder
        [0.064, 1.446, 0.182],  # l_elbow
        [-0.092, 1.602, 0.296],  # l_wrist
        [-0.105, 1.335, 0.094],  # r_shoulder
        [-0.146, 1.550, 0.239],  # r_elbow
        [-0.126, 1.674, 0.338],  # r_wrist
    ),
)

# (9 keyframes) x (grip, club head) x xyz.
KEYFRAME_CLUB = (
    ([0.262, 0.835, -0.000], [0.587, 0.061, -0.000]),  # address
    ([0.199, 1.043, -0.404], [0.417, 0.652, -1.115]),  # toe_up
    ([0.045, 1.399, -0.474], [-0.005, 1.660, -1.271]),  # mid_backswing
    ([-0.098, 1.670, -0.192], [-0.393, 2.417, -0.437]),  # top
    ([0.153, 1.171, -0.457], [0.273, 1.032, -1.277]),  # mid_downswing
    ([0.275, 0.820, 0.064], [0.596, 0.046, 0.122]),  # impact
    ([0.032, 1.287, 0.526], [-0.055, 1.346, 1.360]),  # mid_follow_through
    ([-0.122, 1.693, 0.142], [-0.450, 2.464, 0.200]),  # finish
    ([-0.109, 1.638, 0.317], [-0.421, 2.311, 0.710]),  # rest
)
