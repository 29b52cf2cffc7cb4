from .config import SynthConfig, read_synth_config
from .data import LinearSoftmaxModel, SynthSample, TrainingRun
from .generator import class_means, generate
from .protocol import FoldProtocolResult, default_fold_plan, run_fold_protocol
from .trainer import cross_entropy, cross_entropy_gradient, emit_logits, fit, train
