"""Regenerates the forward-parity fixture: a small DCGAN-shaped generator in
eval mode, exported in the text weight format, plus ten latents and the
framework's outputs for them.

    python3 tests/fixtures/make_parity_fixture.py tests/fixtures
"""
import json
import sys
from pathlib import Path

import torch
from torch import nn


def build(widths=(32, 16, 8)):
    a, b, c = widths
    return nn.Sequential(
        nn.ConvTranspose2d(5, a, 4, 1, 0, bias=False),
        nn.BatchNorm2d(a),
        nn.ReLU(),
        nn.ConvTranspose2d(a, b, 4, 2, 1, bias=False),
        nn.BatchNorm2d(b),
        nn.ReLU(),
        nn.ConvTranspose2d(b, c, 4, 2, 1, bias=False),
        nn.BatchNorm2d(c),
        nn.ReLU(),
        nn.ConvTranspose2d(c, 12, 4, 2, 1, bias=True),
        nn.Tanh(),
    )


def flat(t):
    return [float(x) for x in t.detach().reshape(-1).tolist()]


def export(model):
    layers = []
    for m in model:
        if isinstance(m, nn.ConvTranspose2d):
            layers.append({
                "kind": "conv_transpose",
                "in_channels": m.in_channels,
                "out_channels": m.out_channels,
                "kernel": m.kernel_size[0],
                "stride": m.stride[0],
                "padding": m.padding[0],
                "weight": flat(m.weight),
                "bias": flat(m.bias) if m.bias is not None else None,
            })
        elif isinstance(m, nn.BatchNorm2d):
            layers.append({
                "kind": "batch_norm",
                "channels": m.num_features,
                "eps": m.eps,
                "gamma": flat(m.weight),
                "beta": flat(m.bias),
                "running_mean": flat(m.running_mean),
                "running_var": flat(m.running_var),
            })
        elif isinstance(m, nn.ReLU):
            layers.append({"kind": "activation", "function": "relu"})
        elif isinstance(m, nn.Tanh):
            layers.append({"kind": "activation", "function": "tanh"})
    return {
        "format": "mmgan-generator",
        "version": 1,
        "encoding": "text",
        "metadata": {"latent_size": 5, "channels": 12, "canvas": [32, 32], "crop": [14, 16]},
        "layers": layers,
    }


def main(out_dir):
    out = Path(out_dir)
    torch.manual_seed(20240607)
    model = build()
    with torch.no_grad():
        for m in model:
            if isinstance(m, nn.ConvTranspose2d):
                m.weight.normal_(0.0, 0.15)
                if m.bias is not None:
                    m.bias.uniform_(-0.1, 0.1)
            elif isinstance(m, nn.BatchNorm2d):
                m.weight.uniform_(0.5, 1.5)
                m.bias.uniform_(-0.2, 0.2)
                m.running_mean.normal_(0.0, 0.1)
                m.running_var.uniform_(0.3, 2.0)
    model.eval()

    latents = torch.rand(10, 5) * 2 - 1
    latents[0] = 0.0
    with torch.no_grad():
        outputs = model(latents.view(10, 5, 1, 1))

    (out / "parity_weights.json").write_text(json.dumps(export(model)) + "\n")
    cases = {
        "latents": [flat(z) for z in latents],
        "outputs": [[round(v, 7) for v in flat(o)] for o in outputs],
    }
    (out / "parity_cases.json").write_text(json.dumps(cases) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent)
