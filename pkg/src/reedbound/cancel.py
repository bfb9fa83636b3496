"""Cooperative cancellation for long searches."""

import threading


class SearchCancelled(Exception):
    pass


class CancelToken:
    """Checked by Python-level search loops between kernel calls."""

    def __init__(self):
        self._event = threading.Event()

    def cancel(self):
        self._event.set()

    @property
    def cancelled(self) -> bool:
        return self._event.is_set()

    def check(self):
        if self._event.is_set():
            raise SearchCancelled()


def check(token):
    if token is not None:
        token.check()
