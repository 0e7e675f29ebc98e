'''
.. Signal handling for the ``bt`` program.

   SIGINT and SIGTERM are converted to ``SignalException`` so that a long
   search can be interrupted cleanly; the exception carries the conventional
   shell exit status 128 + signal number.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import signal

_Handled = {
    signal.SIGINT:  'SIGINT',
    signal.SIGTERM: 'SIGTERM',
}


class SignalException(Exception):
    def __init__(self, signum):
        self.signum = signum
        self.signame = _Handled.get(signum, 'signal %d' % signum)
        self.exitCode = 128 + signum

    def __str__(self):
        return "Process received %s" % self.signame

def raiseSignalException(signum, _frame):
    raise SignalException(signum)

def catchSignals(handler=raiseSignalException):
    """
    Install `handler` for the signals ``bt`` converts to exceptions.
    Returns a dict of the previous handlers, keyed by signal number.
    """
    previous = {}
    for sig in _Handled:
        previous[sig] = signal.getsignal(sig)
        signal.signal(sig, handler)

    return previous

def restoreSignals(previous):
    for sig, handler in previous.items():
        signal.signal(sig, handler)
