from .gradients import Gradients, SparseColumns, accumulate, densify, sgd_step
from .layers import INIT_SCALE, AffineLayer, Tower, init_params, init_uniform
from .interaction import Bilinear, ConcatMLP, InnerProduct, Interaction, build_interaction
from .checkpoint import FORMAT_VERSION, load_params, save_params
