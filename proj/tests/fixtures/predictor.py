"""Line-delimited JSON predictor used by the harness tests.

usage: predictor.py MANIFEST MODE
modes: echo     answer with the gold edited spec
       garbage  echo, but answer the second request with a non-JSON line
       slow     echo, but sleep 1.5 s before answering the first request
       exit     answer the first two requests, then exit
       shuffle  echo, preceded by a stray answer for an unknown id
"""
import json
import os
import sys
import time

manifest_path, mode = sys.argv[1], sys.argv[2]
root = os.path.dirname(manifest_path)
gold = {}
with open(manifest_path) as f:
    for line in f:
        rec = json.loads(line)
        gold[rec["id"]] = os.path.join(root, rec["edited_spec"])

for n, line in enumerate(sys.stdin):
    req = json.loads(line)
    assert os.path.exists(req["image_path"]), req["image_path"]
    assert req["prompt"]
    if mode == "exit" and n == 2:
        sys.exit(0)
    if mode == "garbage" and n == 1:
        print("this is not json", flush=True)
        continue
    if mode == "slow" and n == 0:
        time.sleep(1.5)
    if mode == "shuffle":
        print(json.dumps({"id": "nope", "spec_json": "{}"}), flush=True)
    with open(gold[req["id"]]) as f:
        print(json.dumps({"id": req["id"], "spec_json": f.read()}), flush=True)
