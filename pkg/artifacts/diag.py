"""Train one run on the ssl_1000 dataset and report identity/cf metrics."""
import json
import shutil
import sys
import time

import numpy as np
import torch

sys.path.insert(0, "/root/pkg/src")
torch.set_num_threads(1)

from causalgen.data.store import load as load_dataset
from causalgen.evalh.effectiveness import effectiveness
from causalgen.evalh.oracles import load_oracles
from causalgen.nn.checkpoint import load_checkpoint
from causalgen.train import RunConfig, train

WS = "/root/pkg/artifacts/workspace"

steps = int(sys.argv[1]) if len(sys.argv) > 1 else 4000
tag = sys.argv[2] if len(sys.argv) > 2 else "diag"
cf_w = float(sys.argv[3]) if len(sys.argv) > 3 else 0.0
model_kw = json.loads(sys.argv[4]) if len(sys.argv) > 4 else {}
out = f"{WS}/runs/{tag}"
shutil.rmtree(out, ignore_errors=True)

cfg = RunConfig(dataset_dir=f"{WS}/datasets/ssl_1000", out_dir=out,
                variant="ssl", steps=steps, warm_start_steps=max(200, steps // 5),
                batch_size=64, seed=0, checkpoint_every=1000,
                cf_reg_weight=cf_w, model=model_kw)
t0 = time.time()
ckpt = train(cfg)
print(f"trained {steps} steps in {time.time() - t0:.0f}s", flush=True)

model, _ = load_checkpoint(ckpt)
model.eval()
test = load_dataset(f"{WS}/datasets/test_full")
oracles = load_oracles(f"{WS}/oracles.pt")

for target in ("d", "f", "b", "t", "i"):
    r_cf = effectiveness(model, test, target, oracles, n=150, seed=0)
    r_id = effectiveness(model, test, target, oracles, n=150, seed=0, identity=True)
    print(target, "cf", round(r_cf["mean"], 3), "identity", round(r_id["mean"], 3), flush=True)

# reconstruction MAE
from causalgen.cf.engine import CounterfactualQuery, generate_counterfactual
rng = np.random.default_rng(1)
maes = []
for k in rng.integers(0, len(test), 50):
    q = CounterfactualQuery(x=test.image(int(k)), attrs=test.record(int(k)),
                            seed=int(rng.integers(2**31)))
    res = generate_counterfactual(model, q)
    maes.append(np.abs(res.x_cf - test.image(int(k))).mean() * 255)
print("recon MAE:", round(float(np.mean(maes)), 2), flush=True)
print("obs scale:", float(model.decoder.obs_scale()), flush=True)
