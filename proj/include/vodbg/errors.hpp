#pragma once

#include <stdexcept>
#include <string>

namespace vodbg {

// Base for every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Position or prefix length outside the sequence.
class out_of_range_error : public error { using error::error; };
// select() ordinal past the last occurrence.
class not_found_error : public error { using error::error; };
// Symbol not part of the configured alphabet.
class alphabet_error : public error { using error::error; };
// Malformed reads / k-mers (bad symbol, wrong length).
class input_error : public error { using error::error; };
// Matrix handed to a builder violates its preconditions.
class construction_error : public error { using error::error; };
// NodeHandle that is not a node of the claimed order.
class handle_error : public error { using error::error; };
// Requested order outside the allowed range for the operation.
class order_error : public error { using error::error; };

// Index file problems. Loading never yields a partially built index.
class storage_error : public error { using error::error; };
class io_error : public storage_error { using storage_error::storage_error; };
class format_error : public storage_error { using storage_error::storage_error; };
class corruption_error : public storage_error { using storage_error::storage_error; };
class version_error : public storage_error { using storage_error::storage_error; };

}  // namespace vodbg
