"""Diagnostic prompt assembly and a chat-completion client.

A diagnosis prompt stacks, in fixed order: the system line, the equipment's
physical context, the signal's rendered description, and the question, with
an explicit step-by-step reasoning directive.  The client speaks the
standard chat-completion JSON shape so any compatible backend can serve as
the diagnosis model; tests and offline runs inject a transport callable
instead of the network.
"""

from __future__ import annotations

import json
import os
import re
import time
from dataclasses import dataclass, field
from typing import Callable

import requests

from .describe import Description

DEFAULT_SYSTEM = ("You are currently an excellent vibration analysis model, "
                  "please answer the following questions:")
STEP_DIRECTIVE = ("Work through the analysis step by step, combining the "
                  "signal's mathematical features with the equipment's physical "
                  "characteristics, before giving the final answer.")

SECTION_HEADERS = ("[System]", "[Equipment Context]", "[Signal Description]",
                   "[Question]")

_OPTION_RE = re.compile(r"^\s*\(?([A-D])[\.\):]", re.MULTILINE)
# options offered inside a question may sit mid-line ("... A. x or B. y")
_OFFERED_RE = re.compile(r"(?:^|[\s(])([A-D])[\.\):]")


class TransportError(RuntimeError):
    """The chat endpoint could not be reached after all retries."""


@dataclass(frozen=True)
class CotPrompt:
    system: str
    equipment_context: str
    signal_description: str
    question: str
    rendered: str


@dataclass(frozen=True)
class LlmConfig:
    endpoint: str
    model: str
    credential_env: str = "SIGTEXT_API_KEY"
    timeout_s: float = 30.0
    max_retries: int = 2

    def __post_init__(self):
        if self.timeout_s <= 0:
            raise ValueError(f"timeout_s must be > 0, got {self.timeout_s}")
        if self.max_retries < 0:
            raise ValueError(f"max_retries must be >= 0, got {self.max_retries}")


@dataclass
class DiagnosisAnswer:
    raw_reply: str
    choice: str | None
    transcript: list[dict] = field(default_factory=list)


def assemble_cot_prompt(desc: Description | str, equipment_context: str,
                        question: str, system: str = DEFAULT_SYSTEM) -> CotPrompt:
    """Deterministic prompt in the fixed section order."""
    if not question or not question.strip():
        raise ValueError("question must be non-empty")
    signal_text = desc.rendered_text if isinstance(desc, Description) else str(desc)
    context = equipment_context.strip() if equipment_context else ""
    context_block = context if context else "(none provided)"
    rendered = "\n".join([
        SECTION_HEADERS[0], system, "",
        SECTION_HEADERS[1], context_block, "",
        SECTION_HEADERS[2], signal_text, "",
        SECTION_HEADERS[3], question.strip(), "",
        STEP_DIRECTIVE,
    ])
    return CotPrompt(system=system, equipment_context=context,
                     signal_description=signal_text, question=question.strip(),
                     rendered=rendered)


def extract_choice(reply: str, question: str | None = None) -> str | None:
    """Leading option letter A-D of the reply, if one is offered."""
    match = _OPTION_RE.search(reply)
    if match is None:
        return None
    letter = match.group(1)
    if question:
        offered = set(_OFFERED_RE.findall(question))
        if offered and letter not in offered:
            return None
    return letter


def http_transport(cfg: LlmConfig) -> Callable[[dict], dict]:
    """POST the request body to the configured endpoint."""
    def send(body: dict) -> dict:
        headers = {"Content-Type": "application/json"}
        key = os.environ.get(cfg.credential_env, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        response = requests.post(cfg.endpoint, json=body, headers=headers,
                                 timeout=cfg.timeout_s)
        response.raise_for_status()
        return response.json()
    return send


def chat_complete(prompt: CotPrompt, cfg: LlmConfig,
                  transport: Callable[[dict], dict] | None = None,
                  retry_wait_s: float = 0.5) -> DiagnosisAnswer:
    """Send the prompt as (system, user) messages and parse the first reply.

    Retries ``cfg.max_retries`` times on transport failure, then raises
    :class:`TransportError`.  A reply that does not parse as a chat payload
    is preserved verbatim with no extracted choice.
    """
    send = transport if transport is not None else http_transport(cfg)
    user_content = "\n".join([
        SECTION_HEADERS[1], prompt.equipment_context or "(none provided)", "",
        SECTION_HEADERS[2], prompt.signal_description, "",
        SECTION_HEADERS[3], prompt.question, "",
        STEP_DIRECTIVE,
    ])
    body = {
        "model": cfg.model,
        "messages": [
            {"role": "system", "content": prompt.system},
            {"role": "user", "content": user_content},
        ],
    }
    transcript: list[dict] = []
    last_error: Exception | None = None
    for attempt in range(cfg.max_retries + 1):
        try:
            response = send(body)
        except Exception as exc:
            last_error = exc
            transcript.append({"attempt": attempt, "request": body,
                               "error": repr(exc)})
            if attempt < cfg.max_retries:
                time.sleep(retry_wait_s)
            continue
        transcript.append({"attempt": attempt, "request": body,
                           "response": response})
        try:
            reply = response["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError):
            reply = json.dumps(response) if not isinstance(response, str) else response
            return DiagnosisAnswer(raw_reply=reply, choice=None,
                                   transcript=transcript)
        return DiagnosisAnswer(raw_reply=reply,
                               choice=extract_choice(reply, prompt.question),
                               transcript=transcript)
    raise TransportError(
        f"chat endpoint failed after {cfg.max_retries + 1} attempts: {last_error!r}"
    )
