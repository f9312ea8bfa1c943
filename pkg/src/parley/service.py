"""The conversation service: sessions over the engine, with locking and
on-disk persistence.

One engine serves many concurrent conversations.  Turns within a
session are strictly ordered; what happens when a second turn arrives
while one is in flight is the busy policy's call: "busy" (the default)
rejects it so the caller can retry, "wait" queues it.

Ended conversations are appended to ``conversations.jsonl`` under the
data directory, one canonical line each, and user records are saved
alongside.  Both survive service restarts.
"""

from __future__ import annotations

import random
import threading
import uuid
from pathlib import Path

from .engine import Engine, Session
from .logs import ConversationLog
from .users import UserStore

LOGS_FILENAME = "conversations.jsonl"
USERS_FILENAME = "users.json"

BUSY_POLICIES = ("busy", "wait")


class ServiceError(Exception):
    """Carries an HTTP-ish status so transport layers can map it."""

    def __init__(self, status: int, message: str) -> None:
        super().__init__(message)
        self.status = status


def _user_summary(session: Session) -> dict | None:
    """The slice of the user record an inspector cares about."""
    user = session.user
    if user is None:
        return None
    return {
        "user_id": user.user_id,
        "name": user.name,
        "conversations": user.conversations,
        "affinities": dict(sorted(user.affinities.items())),
    }


class ConversationService:
    def __init__(self, engine: Engine | None = None, data_dir: str | Path | None = None) -> None:
        self.engine = engine if engine is not None else Engine()
        busy_policy = self.engine.config.busy_policy
        if busy_policy not in BUSY_POLICIES:
            raise ValueError(f"unknown busy policy {busy_policy!r}")
        self.busy_policy = busy_policy
        self.data_dir = Path(data_dir) if data_dir is not None else None
        self.users: UserStore | None = None
        if self.data_dir is not None:
            self.data_dir.mkdir(parents=True, exist_ok=True)
            self.users = UserStore(self.data_dir / USERS_FILENAME)
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._table_lock = threading.Lock()
        self._log_lock = threading.Lock()

    # -- session lifecycle ----------------------------------------------------

    def create_session(
        self,
        user_id: str | None = None,
        seed: int | None = None,
        variant: str | None = None,
    ) -> dict:
        if seed is None:
            seed = random.randrange(2**31)
        session_id = uuid.uuid4().hex[:12]
        user = None
        if user_id is not None:
            if self.users is None:
                raise ServiceError(400, "no data directory, user accounts unavailable")
            user = self.users.get(user_id)
        session = self.engine.new_session(
            seed, user=user, session_id=session_id, variant=variant
        )
        with self._table_lock:
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        return {
            "session_id": session_id,
            "seed": seed,
            "user_id": user_id,
            "variant": variant,
        }

    def _session(self, session_id: str) -> tuple[Session, threading.Lock]:
        with self._table_lock:
            session = self._sessions.get(session_id)
            lock = self._locks.get(session_id)
        if session is None or lock is None:
            raise ServiceError(404, f"no such session {session_id!r}")
        return session, lock

    def post_turn(self, session_id: str, utterance: str) -> dict:
        session, lock = self._session(session_id)
        if self.busy_policy == "busy":
            if not lock.acquire(blocking=False):
                raise ServiceError(409, "a turn is already in progress")
        else:
            lock.acquire()
        try:
            if session.closed:
                raise ServiceError(410, "session already ended")
            turn = session.take_turn(utterance)
        finally:
            lock.release()
        return {
            "session_id": session_id,
            "response": turn.response,
            "turn": turn.to_dict(),
            "topics": dict(sorted(session.topic_state.turn_distribution.items())),
            "user": _user_summary(session),
        }

    def session_state(self, session_id: str) -> dict:
        """Everything a late-joining inspector needs."""
        session, lock = self._session(session_id)
        with lock:
            return {
                "session_id": session_id,
                "seed": session.seed,
                "user_id": session.user.user_id if session.user else None,
                "variant": session.variant,
                "closed": session.closed,
                "current_topic": session.topic_state.current_topic,
                "turns": [turn.to_dict() for turn in session.turns],
                "topics": dict(sorted(session.topic_state.turn_distribution.items())),
                "user": _user_summary(session),
            }

    def end_session(self, session_id: str, rating: int | None = None) -> dict:
        session, lock = self._session(session_id)
        with lock:
            if session.closed:
                raise ServiceError(410, "session already ended")
            try:
                log = session.end_session(rating)
            except ValueError as err:
                raise ServiceError(400, str(err)) from err
            self._persist(log)
        with self._table_lock:
            self._sessions.pop(session_id, None)
            self._locks.pop(session_id, None)
        return {
            "session_id": session_id,
            "turns": len(log.turns),
            "rating": log.rating,
        }

    # -- persistence -----------------------------------------------------------

    def _persist(self, log: ConversationLog) -> None:
        if self.data_dir is None:
            return
        line = log.dumps() + "\n"
        with self._log_lock:
            # one write call per line keeps concurrent appends whole
            with open(self.data_dir / LOGS_FILENAME, "a", encoding="utf-8") as handle:
                handle.write(line)
                handle.flush()
            if self.users is not None:
                self.users.save()

    def open_sessions(self) -> list[str]:
        with self._table_lock:
            return sorted(self._sessions)
