/*
 * Copyright (c) 2026, the ldsx authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lds {

/// Malformed input data (bad edge-list line, unreadable record file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated a documented precondition.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input exceeds the size a brute-force routine is willing to handle.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A verification routine was invoked outside its contract.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Flow-network construction would overflow 64-bit capacities.
class BuildError : public std::runtime_error {
public:
    explicit BuildError(const std::string& what) : std::runtime_error(what) {}
};

/// The top-k driver exceeded its progress cap.
class ProgressError : public std::runtime_error {
public:
    explicit ProgressError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lds
