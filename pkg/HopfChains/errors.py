# HopfChains/errors.py
# From HopfChains
# Copyright 2026 HopfChains contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# DESCRIPTION
# The errors module contains the custom exceptions raised by the library.
# Each one carries the exit code the command line front end reports for it.


class HopfChainsError(Exception):
    exit_code: int = 2

    def __init__(self, message: str, subject: object = None):
        super().__init__(message)
        self.message = message
        self.subject = subject

    def __str__(self):
        if self.subject is None:
            return self.message
        return f"{self.message} Offending item: {self.subject}"


class InvalidInputError(HopfChainsError):
    exit_code = 2


class NotSupportedError(HopfChainsError):
    exit_code = 2


class NotApplicableError(HopfChainsError):
    exit_code = 2


class NoMarkovRescalingError(HopfChainsError):
    exit_code = 3


class NotNonnegativeError(HopfChainsError):
    exit_code = 3


class UnsupportedSizeError(HopfChainsError):
    exit_code = 4

    def __init__(self, message: str, size: int, cap: int):
        super().__init__(message, f"size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class InternalInconsistencyError(HopfChainsError):
    exit_code = 5


class VerificationError(HopfChainsError):
    exit_code = 5
