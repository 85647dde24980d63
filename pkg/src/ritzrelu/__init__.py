"""Deep Ritz with hand-derived gradients: why ReLU training goes wrong."""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .activation import ACTIVATIONS, Activation, ReLU, ReLUSquared, Softplus, Tanh, get_activation
from .energy import GradientEngine, Problem, energy, energy_grad, mse_grad, mse_loss, sine_problem
from .network import Params, RitzNet, forward, init_params, mixed_grad_smooth, param_grad, spatial_grad
from .quadrature import Grid, delta_stencil, integrate, make_grid

__all__ = [
    "ACTIVATIONS", "Activation", "BACKEND", "GradientEngine", "Grid", "Params", "Problem", "ReLU",
    "ReLUSquared", "RitzNet", "Softplus", "Tanh", "delta_stencil", "energy", "energy_grad", "forward",
    "get_activation", "init_params", "integrate", "make_grid", "mixed_grad_smooth", "mse_grad", "mse_loss",
    "param_grad", "sine_problem", "spatial_grad",
]
